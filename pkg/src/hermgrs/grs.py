"""Generalized Reed-Solomon codes over GF(q^2) and their basic invariants.

A code is described by its locators (distinct field elements), its nonzero
column multipliers, its dimension k, and an `extended` flag adding the
coordinate at infinity (the leading message coefficient).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Sequence, Tuple

from .errors import (
    CombinatorialBudgetExceeded,
    DegreeTooHigh,
    DuplicateLocator,
    EnumerationBudgetExceeded,
)
from .field import Element, Field
from .linalg import Matrix, det
from .poly import Poly

DEFAULT_CODEWORD_BUDGET = 10 ** 6
DEFAULT_MINOR_BUDGET = 10 ** 5
# below this message count is_mds also brute-forces the distance as a
# second, independent check
MDS_CROSSCHECK_LIMIT = 10 ** 4


@dataclass(frozen=True)
class CodeSpec:
    """One (extended) GRS code: locators, multipliers, dimension, flag."""

    field: Field
    locators: Tuple[Element, ...]
    multipliers: Tuple[Element, ...]
    k: int
    extended: bool = False

    def __post_init__(self):
        object.__setattr__(self, "locators", tuple(self.locators))
        object.__setattr__(self, "multipliers", tuple(self.multipliers))
        values = [a.value for a in self.locators]
        if len(set(values)) != len(values):
            raise DuplicateLocator("code locators must be distinct")
        if len(self.multipliers) != len(self.locators):
            raise ValueError("need one multiplier per locator")
        if any(not v for v in self.multipliers):
            raise ValueError("column multipliers must be nonzero")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"dimension k={self.k} out of range for n={self.n}")

    @property
    def n(self) -> int:
        return len(self.locators)

    @property
    def length(self) -> int:
        """Block length including the infinity coordinate, if any."""
        return self.n + 1 if self.extended else self.n

    def parameters(self) -> Tuple[int, int, int]:
        """(length, dimension, designed distance)."""
        return self.length, self.k, self.length - self.k + 1


def u_vector(locators: Sequence[Element]) -> Tuple[Element, ...]:
    """u_i = inverse of prod_{j != i} (alpha_i - alpha_j).

    The empty product for n = 1 is 1, so single-locator extended codes are
    handled uniformly.
    """
    values = [a.value for a in locators]
    if len(set(values)) != len(values):
        raise DuplicateLocator("locators must be distinct")
    field = locators[0].field
    out = []
    for i, ai in enumerate(locators):
        prod = field.one
        for j, aj in enumerate(locators):
            if j != i:
                prod = prod * (ai - aj)
        out.append(field.inv(prod))
    return tuple(out)


def generator_matrix(code: CodeSpec) -> Matrix:
    """k x n (or k x (n+1) extended, final column e_k) generator matrix."""
    f = code.field
    rows = []
    for i in range(code.k):
        row = [v * f.pow(a, i) for a, v in zip(code.locators, code.multipliers)]
        if code.extended:
            row.append(f.one if i == code.k - 1 else f.zero)
        rows.append(row)
    return Matrix(f, rows)


def encode(code: CodeSpec, message: Poly) -> List[Element]:
    """Evaluate a message polynomial of degree <= k-1 into a codeword."""
    if message.degree > code.k - 1:
        raise DegreeTooHigh(
            f"message degree {message.degree} exceeds k-1 = {code.k - 1}"
        )
    word = [v * message.eval(a) for a, v in zip(code.locators, code.multipliers)]
    if code.extended:
        word.append(message.coefficient(code.k - 1))
    return word


def hermitian_gram(code: CodeSpec) -> Matrix:
    """G conj(G)^T where conj is the entrywise Frobenius map."""
    f = code.field
    gen = generator_matrix(code)
    conj_rows = [[f.frobenius(e) for e in row] for row in gen.rows]
    out = []
    for ri in gen.rows:
        out.append(
            [
                _dot(f, ri, cj)
                for cj in conj_rows
            ]
        )
    return Matrix(f, out)


def _dot(f: Field, x: Sequence[Element], y: Sequence[Element]) -> Element:
    acc = f.zero
    for a, b in zip(x, y):
        if a and b:
            acc = acc + a * b
    return acc


def min_distance_bruteforce(
    code: CodeSpec, budget: int = DEFAULT_CODEWORD_BUDGET
) -> int:
    """Minimum weight over all nonzero codewords, by full enumeration."""
    f = code.field
    messages = f.order ** code.k
    if messages > budget:
        raise EnumerationBudgetExceeded(
            f"{messages} message polynomials exceed budget {budget}"
        )
    best = code.length
    for coeff_values in itertools.product(range(f.order), repeat=code.k):
        if not any(coeff_values):
            continue
        msg = Poly(f, [f.element(v) for v in coeff_values])
        weight = sum(1 for e in encode(code, msg) if e)
        if weight < best:
            best = weight
    return best


def is_mds(code: CodeSpec, minor_budget: int = DEFAULT_MINOR_BUDGET) -> bool:
    """True iff every k x k minor of the generator matrix is nonzero.

    When the message space is small enough the brute-force distance is also
    computed and asserted to agree, as an independent check.
    """
    import math

    gen = generator_matrix(code)
    ncols = gen.ncols
    count = math.comb(ncols, code.k)
    if count > minor_budget:
        raise CombinatorialBudgetExceeded(
            f"{count} minors exceed budget {minor_budget}"
        )
    f = code.field
    ok = True
    for cols in itertools.combinations(range(ncols), code.k):
        sub = Matrix(f, [[row[c] for c in cols] for row in gen.rows])
        if not det(sub):
            ok = False
            break
    if f.order ** code.k <= MDS_CROSSCHECK_LIMIT:
        dist = min_distance_bruteforce(code)
        assert ok == (dist == code.length - code.k + 1), (
            "minor test and brute-force distance disagree"
        )
    return ok


# ----- JSON schema -----


def code_to_dict(code: CodeSpec) -> Dict:
    f = code.field
    return {
        "q": f.q,
        "field": f.export_record(),
        "locators": [f.dlog(a) if a else -1 for a in code.locators],
        "multipliers": [f.dlog(v) for v in code.multipliers],
        "k": code.k,
        "extended": code.extended,
    }


def code_from_dict(data: Dict) -> CodeSpec:
    f = Field.from_record(data["field"])
    if f.q != data["q"]:
        raise ValueError("field record does not match declared q")
    locators = tuple(
        f.zero if t == -1 else f.from_dlog(t) for t in data["locators"]
    )
    multipliers = tuple(f.from_dlog(t) for t in data["multipliers"])
    return CodeSpec(
        field=f,
        locators=locators,
        multipliers=multipliers,
        k=data["k"],
        extended=bool(data["extended"]),
    )
