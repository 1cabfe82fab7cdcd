"""Self-duality criteria, multiplier search, span conditions, and scans."""

import itertools
import random

import pytest

from hermgrs import (
    CodeSpec,
    build_criterion_matrix,
    criterion_direct,
    criterion_lemma1,
    criterion_lemma2,
    existence_scan,
    find_multipliers,
    hermitian_gram,
    span_condition_extended,
    span_condition_plain,
)
from hermgrs.errors import DimensionMismatch, DuplicateLocator
from hermgrs.linalg import rref

from util import (
    brute_force_multiplier_exists,
    get_field,
    random_code,
    random_locators,
)


def test_criterion_direct_example_q3():
    f = get_field(3)
    locs = (f.zero, f.theta ** 2)
    good = CodeSpec(f, locs, (f.one, f.theta), 1)
    assert criterion_direct(good)
    assert criterion_lemma1(good)
    bad = CodeSpec(f, locs, (f.one, f.one), 1)
    assert not criterion_direct(bad)
    assert not criterion_lemma1(bad)


def test_criterion_extended_single_locator():
    f = get_field(3)
    # n=1, k=1: need v^(q+1) = -1
    v = f.solve_norm(f.minus_one)
    code = CodeSpec(f, (f.zero,), (v,), 1, extended=True)
    assert criterion_direct(code)
    assert criterion_lemma2(code)
    bad = CodeSpec(f, (f.zero,), (f.one,), 1, extended=True)
    assert not criterion_direct(bad)
    assert not criterion_lemma2(bad)


def test_criterion_shape_errors():
    f = get_field(3)
    wrong = CodeSpec(f, (f.zero, f.one, f.theta), (f.one,) * 3, 1)
    with pytest.raises(DimensionMismatch):
        criterion_direct(wrong)
    plain = CodeSpec(f, (f.zero, f.one), (f.one, f.theta), 1)
    with pytest.raises(DimensionMismatch):
        criterion_lemma2(plain)
    ext = CodeSpec(f, (f.zero,), (f.one,), 1, extended=True)
    with pytest.raises(DimensionMismatch):
        criterion_lemma1(ext)


def test_criteria_permutation_invariant():
    rng = random.Random(501)
    f = get_field(3)
    for _ in range(40):
        code = random_code(rng, f, 4)
        perm = list(range(4))
        rng.shuffle(perm)
        shuffled = CodeSpec(
            f,
            tuple(code.locators[i] for i in perm),
            tuple(code.multipliers[i] for i in perm),
            code.k,
        )
        assert criterion_direct(code) == criterion_direct(shuffled)


def test_criteria_agree_exhaustively_small():
    f = get_field(3)
    # plain n=2: every locator pair x every multiplier pair
    for locs in itertools.combinations(f.elements(), 2):
        for vals in itertools.product(range(1, 9), repeat=2):
            code = CodeSpec(f, locs, tuple(f.element(v) for v in vals), 1)
            assert criterion_direct(code) == criterion_lemma1(code)
    # extended n=1: every locator x every multiplier
    for loc in f.elements():
        for v in range(1, 9):
            code = CodeSpec(f, (loc,), (f.element(v),), 1, extended=True)
            assert criterion_direct(code) == criterion_lemma2(code)


def test_criteria_agree_random_larger():
    rng = random.Random(502)
    for _ in range(300):
        f = get_field(rng.choice((3, 4)))
        if rng.random() < 0.5:
            code = random_code(rng, f, 4)
            assert criterion_direct(code) == criterion_lemma1(code)
        else:
            code = random_code(rng, f, 3, extended=True)
            assert criterion_direct(code) == criterion_lemma2(code)


def test_build_criterion_matrix_shapes():
    f = get_field(3)
    crit = build_criterion_matrix(f, (f.zero, f.one), extended=False)
    assert crit.matrix.nrows == 1 and crit.exponents == [0]
    assert crit.matrix.rows[0] == [f.one, f.one]  # 0^0 = 1
    assert all(not e for e in crit.rhs)
    crit = build_criterion_matrix(f, (f.zero,), extended=True)
    assert crit.matrix.nrows == 1 and crit.exponents == [0]
    assert crit.rhs == [f.minus_one]


def test_build_criterion_matrix_extended_rhs_position():
    f = get_field(3)
    locs = (f.zero, f.one, f.theta)
    crit = build_criterion_matrix(f, locs, extended=True)
    q, h = f.q, 1
    assert crit.matrix.nrows == 4
    assert crit.exponents == [0, 1, q, q + 1]
    assert crit.exponents[-1] == h * (q + 1)
    assert [e.value for e in crit.rhs[:-1]] == [0, 0, 0]
    assert crit.rhs[-1] == f.minus_one


def test_build_criterion_matrix_full_rank_at_n_2q():
    rng = random.Random(503)
    for q in (3, 4):
        f = get_field(q)
        for _ in range(5):
            locs = random_locators(rng, f, 2 * q)
            crit = build_criterion_matrix(f, locs, extended=False)
            _, rank, _ = rref(crit.matrix)
            assert rank == 2 * q


def test_build_criterion_matrix_duplicate_and_parity():
    f = get_field(3)
    with pytest.raises(DuplicateLocator):
        build_criterion_matrix(f, (f.one, f.one), extended=False)
    with pytest.raises(DimensionMismatch):
        build_criterion_matrix(f, (f.one, f.theta), extended=True)
    with pytest.raises(DimensionMismatch):
        build_criterion_matrix(f, (f.one,), extended=False)


def test_find_multipliers_example_q3():
    f = get_field(3)
    code = find_multipliers(f, (f.zero, f.theta ** 2))
    assert code is not None
    assert code.multipliers == (f.one, f.theta)
    assert hermitian_gram(code).is_zero()
    # norms of the two multipliers are negatives of each other
    assert f.norm(code.multipliers[0]) == -f.norm(code.multipliers[1])


def test_find_multipliers_negative_cases_q3():
    f = get_field(3)
    units6 = tuple(f.from_dlog(t) for t in range(6))
    assert find_multipliers(f, units6) is None
    units5 = tuple(f.from_dlog(t) for t in range(5))
    assert find_multipliers(f, units5, extended=True) is None


def test_find_multipliers_matches_bruteforce():
    f = get_field(3)
    cases = [
        ((f.zero, f.one), False),
        ((f.zero, f.theta ** 2), False),
        ((f.one, f.theta), False),
        ((f.zero, f.one, f.theta, f.theta ** 2), False),
        ((f.zero, f.theta ** 2, f.theta ** 4, f.theta ** 6), False),
        ((f.zero,), True),
        ((f.theta,), True),
        ((f.zero, f.one, f.theta ** 4), True),
        ((f.zero, f.theta ** 2, f.theta ** 6), True),
    ]
    for locs, extended in cases:
        found = find_multipliers(f, locs, extended=extended)
        oracle = brute_force_multiplier_exists(f, locs, extended=extended)
        assert (found is not None) == oracle


def test_span_condition_plain_subgroup():
    # on the norm-one subgroup the power vectors repeat with period q+1,
    # so the span condition holds at every even n up to q+1
    for q in (3, 4, 5):
        f = get_field(q)
        pool = sorted(f.norm_one_subgroup(), key=lambda a: a.value)
        for n in range(2, q + 2, 2):
            res = span_condition_plain(f, tuple(pool[:n]))
            assert res.holds and res.target_exponent is not None


def test_span_condition_plain_negative():
    f = get_field(3)
    # locators {0, 1}: the target vector (0, 1) is not a multiple of (1, 1)
    res = span_condition_plain(f, (f.zero, f.one))
    assert not res.holds


def test_span_condition_extended_full_subfield():
    # locators = all of GF(q), q >= 5: alpha^q = alpha folds the grid onto
    # enough consecutive powers to reach the target
    for q in (5, 7):
        f = get_field(q)
        locs = tuple(f.subfield_elements())
        res = span_condition_extended(f, locs)
        assert res.holds


def test_span_condition_extended_negative():
    f = get_field(5)
    locs = tuple(f.subfield_elements()[:3])
    assert not span_condition_extended(f, locs).holds


def test_span_condition_parity_errors():
    f = get_field(3)
    with pytest.raises(DimensionMismatch):
        span_condition_plain(f, (f.one,))
    with pytest.raises(DimensionMismatch):
        span_condition_extended(f, (f.one, f.theta))


def test_existence_scan_counts_q3():
    f = get_field(3)
    report = existence_scan(f, 2, list(f.elements()))
    totals = report.totals
    assert totals["tested"] == 36
    assert totals["exists"] > 0
    for entry in report.entries:
        if entry.exists:
            assert entry.gram_checked and entry.multipliers is not None
        else:
            assert entry.multipliers is None


def test_existence_scan_nonexistence_q3_n6():
    f = get_field(3)
    report = existence_scan(f, 6, list(f.units()))
    assert report.totals == {"tested": 28, "exists": 0, "none": 28}


def test_existence_scan_nonexistence_q3_n5_extended():
    f = get_field(3)
    report = existence_scan(f, 5, list(f.units()), extended=True)
    assert report.totals == {"tested": 56, "exists": 0, "none": 56}


def test_existence_scan_to_dict():
    f = get_field(3)
    report = existence_scan(f, 2, f.trace_zero_set(), pool_description="trace-zero")
    data = report.to_dict()
    assert data["q"] == 3 and data["n"] == 2 and data["pool"] == "trace-zero"
    assert data["totals"]["tested"] == 3
    assert len(data["entries"]) == 3
