"""Hermitian self-dual (extended) generalized Reed-Solomon codes over GF(q^2).

Construction of the three explicit evaluation-set families, three independent
self-duality criteria, constructive multiplier search, and exhaustive
existence / non-existence scans at desk scale.
"""

__version__ = "0.1.0"

from .field import Element, Field, field_for_q, make_field
from .grs import (
    CodeSpec,
    code_from_dict,
    code_to_dict,
    encode,
    generator_matrix,
    hermitian_gram,
    is_mds,
    min_distance_bruteforce,
    u_vector,
)
from .poly import Poly, interpolate
from .selfdual import (
    build_criterion_matrix,
    criterion_direct,
    criterion_lemma1,
    criterion_lemma2,
    existence_scan,
    find_multipliers,
    span_condition_extended,
    span_condition_plain,
)
from .constructions import (
    construct_theorem1,
    construct_theorem2,
    construct_theorem3,
    family_B,
    family_Blm,
    family_S,
)

__all__ = [
    "CodeSpec",
    "Element",
    "Field",
    "Poly",
    "build_criterion_matrix",
    "code_from_dict",
    "code_to_dict",
    "construct_theorem1",
    "construct_theorem2",
    "construct_theorem3",
    "criterion_direct",
    "criterion_lemma1",
    "criterion_lemma2",
    "encode",
    "existence_scan",
    "family_B",
    "family_Blm",
    "family_S",
    "field_for_q",
    "find_multipliers",
    "generator_matrix",
    "hermitian_gram",
    "interpolate",
    "is_mds",
    "make_field",
    "min_distance_bruteforce",
    "span_condition_extended",
    "span_condition_plain",
    "u_vector",
]
