"""Hermitian self-duality criteria, multiplier search, and existence scans.

Three independent routes decide self-duality:

* the direct route: the Hermitian Gram matrix of the generator rows is zero;
* the witness-polynomial route: for each message monomial there is an
  interpolant of low enough degree (plus a boundary coefficient condition in
  the extended case);
* the power-sum route: a structured linear system over GF(q^2) admits a
  solution vector with all coordinates in GF(q)*.

The power-sum route is constructive (it yields multipliers via norm lifting)
and, because the solution coset is enumerated exhaustively, its negative
answers are proofs of non-existence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, DuplicateLocator
from .field import Element, Field
from .grs import CodeSpec, hermitian_gram, u_vector
from .linalg import (
    DEFAULT_COSET_BUDGET,
    Matrix,
    matvec,
    rref,
    solve,
    solve_in_subfield_nonzero,
)
from .poly import interpolate


@dataclass
class CriterionMatrix:
    """The power-sum system whose GF(q)* solvability decides self-duality.

    Exponents are kept as plain integers; they are reduced mod q^2-1 only
    when a nonzero locator is raised to them (0^0 evaluates to 1, so the
    all-ones row is correct even when a locator is zero).
    """

    matrix: Matrix
    rhs: List[Element]
    exponents: List[int]


@dataclass
class SpanConditionResult:
    """Outcome of the monomial span membership test."""

    holds: bool
    target_exponent: Optional[int] = None
    witness: Optional[List[Element]] = None


def _check_shape(code: CodeSpec) -> None:
    if code.extended:
        if code.n != 2 * code.k - 1:
            raise DimensionMismatch(
                f"extended self-dual shape needs n = 2k-1, got n={code.n}, k={code.k}"
            )
    else:
        if code.n != 2 * code.k:
            raise DimensionMismatch(
                f"self-dual shape needs n = 2k, got n={code.n}, k={code.k}"
            )


def criterion_direct(code: CodeSpec) -> bool:
    """Self-dual iff the Hermitian Gram matrix vanishes (dimension count
    upgrades self-orthogonality to self-duality for these shapes)."""
    _check_shape(code)
    return hermitian_gram(code).is_zero()


def criterion_lemma1(code: CodeSpec) -> bool:
    """Witness-polynomial criterion for plain codes with n = 2k.

    For each monomial message x^j the required witness, if it exists, is the
    unique interpolant through n points; additivity of the Frobenius map
    makes the monomial basis sufficient.
    """
    if code.extended:
        raise DimensionMismatch("plain-code criterion applied to an extended code")
    _check_shape(code)
    f = code.field
    u = u_vector(code.locators)
    for j in range(code.k):
        points = []
        for a, v, ui in zip(code.locators, code.multipliers, u):
            target = f.norm(v) * f.pow(f.frobenius(a), j) / ui
            points.append((a, target))
        g = interpolate(f, points)
        if g.degree > code.k - 1:
            return False
    return True


def criterion_lemma2(code: CodeSpec) -> bool:
    """Witness-polynomial criterion for extended codes with n = 2k-1.

    On top of the degree bound, the witness must have top coefficient 0 for
    monomials below x^(k-1) and -1 for x^(k-1) itself.
    """
    if not code.extended:
        raise DimensionMismatch("extended-code criterion applied to a plain code")
    _check_shape(code)
    f = code.field
    u = u_vector(code.locators)
    for j in range(code.k):
        points = []
        for a, v, ui in zip(code.locators, code.multipliers, u):
            target = f.norm(v) * f.pow(f.frobenius(a), j) / ui
            points.append((a, target))
        g = interpolate(f, points)
        if g.degree > code.k - 1:
            return False
        top = g.coefficient(code.k - 1)
        required = -f.one if j == code.k - 1 else f.zero
        if top.value != required.value:
            return False
    return True


def _locator_power(f: Field, a: Element, e: int) -> Element:
    # 0^0 = 1; exponents reduced mod q^2-1 only for nonzero locators
    if not a:
        return f.one if e == 0 else f.zero
    return f.from_dlog(f.dlog(a) * e)


def build_criterion_matrix(
    field: Field, locators: Sequence[Element], extended: bool
) -> CriterionMatrix:
    """The exponent-grid system: rows alpha^(i+jq) over the half-size grid.

    Plain (n even): (n/2)^2 rows, zero right-hand side.  Extended (n odd):
    ((n+1)/2)^2 rows, right-hand side zero except -1 on the final row
    (exponent ((n-1)/2)(q+1)).
    """
    values = [a.value for a in locators]
    if len(set(values)) != len(values):
        raise DuplicateLocator("locators must be distinct")
    n = len(locators)
    q = field.q
    if extended:
        if n % 2 == 0:
            raise DimensionMismatch("extended criterion needs odd n")
        half = (n - 1) // 2
        exponents = [i + j * q for j in range(half + 1) for i in range(half + 1)]
    else:
        if n % 2:
            raise DimensionMismatch("plain criterion needs even n")
        half = n // 2
        exponents = [i + j * q for j in range(half) for i in range(half)]
    rows = [
        [_locator_power(field, a, e) for a in locators] for e in exponents
    ]
    rhs = [field.zero] * len(rows)
    if extended:
        rhs[-1] = field.minus_one
    return CriterionMatrix(Matrix(field, rows), rhs, exponents)


def find_multipliers(
    field: Field,
    locators: Sequence[Element],
    extended: bool = False,
    budget: int = DEFAULT_COSET_BUDGET,
) -> Optional[CodeSpec]:
    """Multipliers making the (E)GRS code on these locators self-dual.

    Solves the power-sum system for x in (GF(q)*)^n and lifts each x_i to a
    norm preimage v_i.  Returns None only after the whole solution coset has
    been exhausted, so None certifies non-existence for this locator vector.
    """
    crit = build_criterion_matrix(field, locators, extended)
    sol = solve_in_subfield_nonzero(crit.matrix, crit.rhs, budget=budget)
    if sol is None:
        return None
    multipliers = tuple(field.solve_norm(xi) for xi in sol.x)
    n = len(locators)
    k = (n + 1) // 2 if extended else n // 2
    code = CodeSpec(
        field=field,
        locators=tuple(locators),
        multipliers=multipliers,
        k=k,
        extended=extended,
    )
    assert criterion_direct(code), "norm lifting produced a non-self-dual code"
    return code


def _span_membership(
    field: Field,
    locators: Sequence[Element],
    span_exponents: Sequence[int],
    target_exponents: Sequence[int],
) -> SpanConditionResult:
    span_vectors = [
        [_locator_power(field, a, e) for a in locators] for e in span_exponents
    ]
    # columns = spanning vectors, one equation per locator position
    columns = Matrix(field, [list(col) for col in zip(*span_vectors)]) if span_vectors else None
    for te in target_exponents:
        target = [_locator_power(field, a, te) for a in locators]
        if columns is None:
            if all(not t for t in target):
                return SpanConditionResult(True, te, [])
            continue
        coeffs = solve(columns, target)
        if coeffs is not None:
            combo = matvec(columns, coeffs)
            assert all((c - t).value == 0 for c, t in zip(combo, target))
            return SpanConditionResult(True, te, coeffs)
    return SpanConditionResult(False)


def span_condition_plain(field: Field, locators: Sequence[Element]) -> SpanConditionResult:
    """Membership of alpha^(n/2+q) or alpha^((n/2)q+1) in the span of the
    half-grid power vectors (n even)."""
    n = len(locators)
    if n % 2:
        raise DimensionMismatch("plain span condition needs even n")
    q = field.q
    half = n // 2
    span_exponents = [i + j * q for j in range(half) for i in range(half)]
    targets = [half + q, half * q + 1]
    return _span_membership(field, locators, span_exponents, targets)


def span_condition_extended(field: Field, locators: Sequence[Element]) -> SpanConditionResult:
    """Membership of alpha^((n+1)/2) or alpha^(((n+1)/2)q) in the span of
    the truncated grid (n odd; the last block stops one exponent early)."""
    n = len(locators)
    if n % 2 == 0:
        raise DimensionMismatch("extended span condition needs odd n")
    q = field.q
    h = (n - 1) // 2
    span_exponents = [i + j * q for j in range(h) for i in range(h + 1)]
    span_exponents += [h * q + i for i in range(h)]
    targets = [(n + 1) // 2, ((n + 1) // 2) * q]
    return _span_membership(field, locators, span_exponents, targets)


# ----- existence scans -----


@dataclass
class ScanEntry:
    locators: Tuple[Element, ...]
    exists: bool
    multipliers: Optional[Tuple[Element, ...]] = None
    gram_checked: bool = False


@dataclass
class ScanReport:
    """Result of an exhaustive existence sweep over locator subsets."""

    field: Field
    n: int
    k: int
    extended: bool
    pool_description: str
    entries: List[ScanEntry] = dc_field(default_factory=list)

    @property
    def totals(self) -> Dict[str, int]:
        exists = sum(1 for e in self.entries if e.exists)
        return {
            "tested": len(self.entries),
            "exists": exists,
            "none": len(self.entries) - exists,
        }

    def to_dict(self) -> Dict:
        f = self.field
        enc = lambda a: f.dlog(a) if a else -1
        return {
            "field": f.export_record(),
            "q": f.q,
            "n": self.n,
            "k": self.k,
            "extended": self.extended,
            "pool": self.pool_description,
            "entries": [
                {
                    "locators": [enc(a) for a in e.locators],
                    "exists": e.exists,
                    "multipliers": (
                        [f.dlog(v) for v in e.multipliers] if e.multipliers else None
                    ),
                    "gram_checked": e.gram_checked,
                }
                for e in self.entries
            ],
            "totals": self.totals,
        }


def existence_scan(
    field: Field,
    n: int,
    pool: Sequence[Element],
    extended: bool = False,
    budget: int = DEFAULT_COSET_BUDGET,
    pool_description: str = "",
) -> ScanReport:
    """Run find_multipliers over every n-subset of the pool.

    Subsets are canonicalized to ascending canonical index; the criteria are
    permutation-invariant, so this loses no generality.
    """
    ordered = sorted(pool, key=lambda a: a.value)
    k = (n + 1) // 2 if extended else n // 2
    report = ScanReport(
        field=field,
        n=n,
        k=k,
        extended=extended,
        pool_description=pool_description or f"{len(ordered)} elements",
    )
    for subset in itertools.combinations(ordered, n):
        code = find_multipliers(field, subset, extended=extended, budget=budget)
        if code is None:
            report.entries.append(ScanEntry(subset, False))
        else:
            report.entries.append(
                ScanEntry(subset, True, code.multipliers, gram_checked=True)
            )
    return report
