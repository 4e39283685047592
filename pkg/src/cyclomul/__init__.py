"""Multiplication in cyclotomic rings GF(p)[x]/(x^n - 1) and cyclotomic
fields, with specialized type-I/type-II optimal-normal-basis finite-field
multipliers, exact operation counting, and an independent splitting-field
oracle."""

from .cyclocore import (
    ALGEBRA_KINDS,
    FIELD,
    GENERAL_VARIANTS,
    RING,
    CycloElement,
    add,
    fields_equal,
    format_vector,
    inverse_sqrt_perm,
    mul_alg1,
    mul_alg2,
    mul_direct,
    mul_general,
    parse_vector,
    shift,
    sqrt_perm,
)
from .errors import (
    CyclomulError,
    DimensionMismatch,
    NoRoot,
    NoSuchElement,
    NotCoprime,
    NotFoldable,
    OddDimensionRequired,
    OracleUnavailable,
    OrderMismatch,
    TooLarge,
    UnsupportedCombination,
    WrongBasisType,
)
from .gaussonb import (
    GaussParams,
    NormalBasisElement,
    embed_onb1,
    embed_onb2,
    extract_onb1,
    extract_onb2,
    find_alpha,
    mul_onb1,
    mul_onb2,
    s_fold,
)
from .groundfield import GroundField, OpCount, is_prime

__version__ = "0.1.0"

__all__ = [
    "ALGEBRA_KINDS",
    "FIELD",
    "GENERAL_VARIANTS",
    "RING",
    "CycloElement",
    "CyclomulError",
    "DimensionMismatch",
    "GaussParams",
    "GroundField",
    "NoRoot",
    "NoSuchElement",
    "NormalBasisElement",
    "NotCoprime",
    "NotFoldable",
    "OddDimensionRequired",
    "OpCount",
    "OracleUnavailable",
    "OrderMismatch",
    "TooLarge",
    "UnsupportedCombination",
    "WrongBasisType",
    "add",
    "embed_onb1",
    "embed_onb2",
    "extract_onb1",
    "extract_onb2",
    "fields_equal",
    "find_alpha",
    "format_vector",
    "inverse_sqrt_perm",
    "is_prime",
    "mul_alg1",
    "mul_alg2",
    "mul_direct",
    "mul_general",
    "mul_onb1",
    "mul_onb2",
    "parse_vector",
    "s_fold",
    "shift",
    "sqrt_perm",
]
