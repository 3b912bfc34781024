"""Cages from the generalized quadrangle W(q) and girth-7 graphs obtained by excision."""

from .cage import INF, VertexLabel, build_cage, cage_order, format_label, moore_bound, neighbors, parse_label
from .excise_even import build_gamma_q1_even, construct_even, even_order
from .excise_odd import build_gamma_q1_odd, build_gamma_q2, construct_odd, latin_square, latin_symbol, odd_order
from .exceptions import GirthViolationError, GQCagesError, NotPrimePowerError
from .factorization import OneFactorization, one_factorize
from .formats import decode, encode
from .gf import Field, FieldElement, make_field
from .graph import Graph, SurgerySpec, apply_surgery, girth, girth_with_witness
from .verify import Certificate, certify, check_latin, check_matching_conditions

__all__ = [
    "INF",
    "VertexLabel",
    "build_cage",
    "cage_order",
    "format_label",
    "moore_bound",
    "neighbors",
    "parse_label",
    "build_gamma_q1_even",
    "construct_even",
    "even_order",
    "build_gamma_q1_odd",
    "build_gamma_q2",
    "construct_odd",
    "latin_square",
    "latin_symbol",
    "odd_order",
    "GirthViolationError",
    "GQCagesError",
    "NotPrimePowerError",
    "OneFactorization",
    "one_factorize",
    "decode",
    "encode",
    "Field",
    "FieldElement",
    "make_field",
    "Graph",
    "SurgerySpec",
    "apply_surgery",
    "girth",
    "girth_with_witness",
    "Certificate",
    "certify",
    "check_latin",
    "check_matching_conditions",
]
