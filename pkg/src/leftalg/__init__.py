"""Exact arithmetic for left algebraicity in skew Laurent series and quaternion algebras."""

from .algebraicity import (
    inverse_span_check,
    is_left_algebraic,
    lemma22_dichotomy,
    lemma22_independence,
    left_minpoly,
    monomial_witness,
    right_alg_kernel,
    thm23_identity,
)
from .errors import (
    BasisNotIndependent,
    BoundViolated,
    CentralPair,
    DivisionByZero,
    DuplicateAlpha,
    InsufficientPrecision,
    NotInImage,
    ParseError,
    UndefinedDegmin,
    XCentral,
    ZeroNorm,
)
from .expr import parse_element, parse_expr, render
from .orepoly import OrePoly, left_eval, right_eval
from .quaternion import QAlgebra, Quat, quat_minpoly_center
from .rng import SplitMix64
from .scalars import MPoly, RatFunc, shift, unshift, x
from .series import T, SkewSeries, n_conjugate, n_contains, series_inv
from .structure import (
    KPoly,
    build_operator,
    cyclic_vector,
    invariant_factors,
    operator_minpoly,
    theorem33_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "BasisNotIndependent",
    "BoundViolated",
    "CentralPair",
    "DivisionByZero",
    "DuplicateAlpha",
    "InsufficientPrecision",
    "KPoly",
    "MPoly",
    "NotInImage",
    "OrePoly",
    "ParseError",
    "QAlgebra",
    "Quat",
    "RatFunc",
    "SkewSeries",
    "SplitMix64",
    "T",
    "UndefinedDegmin",
    "XCentral",
    "ZeroNorm",
    "build_operator",
    "cyclic_vector",
    "invariant_factors",
    "inverse_span_check",
    "is_left_algebraic",
    "left_eval",
    "left_minpoly",
    "lemma22_dichotomy",
    "lemma22_independence",
    "monomial_witness",
    "n_conjugate",
    "n_contains",
    "operator_minpoly",
    "parse_element",
    "parse_expr",
    "quat_minpoly_center",
    "render",
    "right_alg_kernel",
    "right_eval",
    "series_inv",
    "shift",
    "theorem33_pipeline",
    "thm23_identity",
    "unshift",
    "x",
]
