"""Dense exact linear algebra over GF(q^2).

Includes the subfield solver at the heart of the existence scans: finding a
solution of M x = b whose coordinates all lie in GF(q)*, or proving that no
such solution exists by exhausting the affine solution coset over GF(q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import EnumerationBudgetExceeded
from .field import Element, Field

DEFAULT_COSET_BUDGET = 10 ** 7

Vector = List[Element]


class Matrix:
    """Row-major matrix of field elements."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: List[Vector]):
        self.field = field
        self.rows = rows
        ncols = len(rows[0]) if rows else 0
        assert all(len(r) == ncols for r in rows), "ragged rows"

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def copy(self) -> "Matrix":
        return Matrix(self.field, [list(r) for r in self.rows])

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    def to_dlog_rows(self) -> List[List[int]]:
        """JSON encoding: dlog per entry, -1 for zero."""
        f = self.field
        return [
            [f.dlog(e) if e else -1 for e in row]
            for row in self.rows
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and [[e.value for e in r] for r in self.rows]
            == [[e.value for e in r] for r in other.rows]
        )

    def __repr__(self) -> str:
        body = "\n".join("  [" + ", ".join(map(repr, r)) + "]" for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols},\n{body})"


@dataclass
class SubfieldSolution:
    """A vector in (GF(q)*)^n solving M x = b, with its residual check."""

    x: Vector
    residual_ok: bool


def rref(mat: Matrix) -> Tuple[Matrix, int, List[int]]:
    """Reduced row-echelon form; returns (R, rank, pivot columns)."""
    field = mat.field
    rows = [list(r) for r in mat.rows]
    nrows, ncols = len(rows), mat.ncols
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(field, rows), len(pivots), pivots


def null_space(mat: Matrix) -> List[Vector]:
    """A basis of the right kernel of `mat`, one vector per free column."""
    field = mat.field
    reduced, rank, pivots = rref(mat)
    free = [c for c in range(mat.ncols) if c not in pivots]
    basis: List[Vector] = []
    for fc in free:
        vec = [field.zero] * mat.ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced.rows[r][fc]
        basis.append(vec)
    return basis


def solve(mat: Matrix, b: Vector) -> Optional[Vector]:
    """One particular solution of M x = b (free variables zero), or None."""
    field = mat.field
    augmented = Matrix(field, [row + [bi] for row, bi in zip(mat.rows, b)])
    reduced, rank, pivots = rref(augmented)
    if mat.ncols in pivots:
        return None  # inconsistent
    x = [field.zero] * mat.ncols
    for r, pc in enumerate(pivots):
        x[pc] = reduced.rows[r][mat.ncols]
    return x

def matvec(mat: Matrix, x: Vector) -> Vector:
    field = mat.field
    out = []
    for row in mat.rows:
        acc = field.zero
        for a, xi in zip(row, x):
            if a and xi:
                acc = acc + a * xi
        out.append(acc)
    return out


def det(mat: Matrix) -> Element:
    """Determinant via Gaussian elimination (square matrices only)."""
    field = mat.field
    n = mat.nrows
    assert n == mat.ncols, "determinant needs a square matrix"
    rows = [list(r) for r in mat.rows]
    result = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result = result * rows[c][c]
        inv = field.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = rows[i][c] * inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
    return result


def subfield_components(x: Element) -> Tuple[Element, Element]:
    """Write x = x0 + theta*x1 with x0, x1 in GF(q) (basis {1, theta})."""
    field = x.field
    theta = field.theta
    x1 = (x - field.frobenius(x)) / (theta - field.frobenius(theta))
    x0 = x - theta * x1
    return x0, x1


def split_to_subfield(mat: Matrix, b: Vector) -> Tuple[Matrix, Vector]:
    """Stack the {1, theta}-components of M x = b into a system over GF(q).

    For x with all coordinates in GF(q), M x = b over GF(q^2) holds iff the
    returned 2r x n system does over GF(q).
    """
    rows0, rows1 = [], []
    b0, b1 = [], []
    for row, bi in zip(mat.rows, b):
        comps = [subfield_components(e) for e in row]
        rows0.append([c[0] for c in comps])
        rows1.append([c[1] for c in comps])
        bc = subfield_components(bi)
        b0.append(bc[0])
        b1.append(bc[1])
    return Matrix(mat.field, rows0 + rows1), b0 + b1


def solve_in_subfield_nonzero(
    mat: Matrix,
    b: Vector,
    budget: int = DEFAULT_COSET_BUDGET,
) -> Optional[SubfieldSolution]:
    """Find x in (GF(q)*)^n with M x = b, or prove none exists.

    The split system over GF(q) is solved exactly; the affine coset
    (particular solution + kernel) is enumerated in full, so a None return
    is a proof of non-existence for this system.  Among all solutions the
    lexicographically smallest by canonical element index is returned.
    """
    field = mat.field
    q = field.q
    n = mat.ncols
    sub_mat, sub_b = split_to_subfield(mat, b)
    particular = solve(sub_mat, sub_b)
    if particular is None:
        return None
    basis = null_space(sub_mat)
    d = len(basis)
    if q ** d > budget:
        raise EnumerationBudgetExceeded(
            f"coset of size {q}^{d} exceeds budget {budget}"
        )
    subfield = field.subfield_elements()  # ascending canonical index
    best: Optional[Vector] = None
    best_key: Optional[Tuple[int, ...]] = None
    for coeffs in itertools.product(subfield, repeat=d):
        x = list(particular)
        for c, vec in zip(coeffs, basis):
            if c:
                x = [xi + c * vi for xi, vi in zip(x, vec)]
        if any(not xi for xi in x):
            continue
        key = tuple(xi.value for xi in x)
        if best_key is None or key < best_key:
            best, best_key = x, key
    if best is None:
        return None
    residual_ok = all(
        (ri - bi).value == 0 for ri, bi in zip(matvec(mat, best), b)
    ) and all(field.in_subfield(xi) and xi for xi in best)
    assert residual_ok, "subfield solution failed its residual check"
    return SubfieldSolution(x=best, residual_ok=residual_ok)
