"""Shared helpers and independent brute-force oracles for the test suite."""

import itertools
from functools import lru_cache

from hermgrs import CodeSpec, field_for_q, hermitian_gram
from hermgrs.linalg import Matrix, matvec


@lru_cache(maxsize=None)
def get_field(q):
    return field_for_q(q)


def brute_force_subfield_solutions(mat, b):
    """All x in (GF(q)*)^n with M x = b, by full enumeration."""
    field = mat.field
    nonzero_subfield = [x for x in field.subfield_elements() if x]
    out = []
    for x in itertools.product(nonzero_subfield, repeat=mat.ncols):
        residual = matvec(mat, list(x))
        if all((ri - bi).value == 0 for ri, bi in zip(residual, b)):
            out.append(list(x))
    return out


def brute_force_multiplier_exists(field, locators, extended=False):
    """Does any v in (GF(q^2)*)^n make the (E)GRS code Hermitian self-dual?

    Direct Gram-matrix enumeration, independent of the power-sum route.
    """
    n = len(locators)
    k = (n + 1) // 2 if extended else n // 2
    for values in itertools.product(range(1, field.order), repeat=n):
        code = CodeSpec(
            field=field,
            locators=tuple(locators),
            multipliers=tuple(field.element(v) for v in values),
            k=k,
            extended=extended,
        )
        if hermitian_gram(code).is_zero():
            return True
    return False


def random_element(rng, field):
    return field.element(rng.randrange(field.order))


def random_unit(rng, field):
    return field.element(rng.randrange(1, field.order))


def random_locators(rng, field, n):
    values = rng.sample(range(field.order), n)
    return tuple(field.element(v) for v in values)


def random_code(rng, field, n, extended=False):
    """A random (E)GRS code of self-dual shape with random multipliers."""
    k = (n + 1) // 2 if extended else n // 2
    return CodeSpec(
        field=field,
        locators=random_locators(rng, field, n),
        multipliers=tuple(random_unit(rng, field) for _ in range(n)),
        k=k,
        extended=extended,
    )


def random_matrix(rng, field, nrows, ncols):
    return Matrix(
        field,
        [[random_element(rng, field) for _ in range(ncols)] for _ in range(nrows)],
    )
