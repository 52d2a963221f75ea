"""Topological type of cuspidal plane curve germs from a parametrization.

The main entry point is :func:`analyze`, which runs the P_k recursion on a
pair of series ``x(t), y(t)`` and returns the r-sequence, the characteristic
sequence and the normalized Puiseux coefficients.  :mod:`cusp_char.puiseux`
computes the same data the classical way and serves as a cross-check.
"""

from .engine import (
    CharSequence,
    EngineResult,
    Parametrization,
    PkTrace,
    analyze,
    extract_characteristic,
    p1_step,
    pk_step,
    recover_coefficient,
    run_algorithm,
    validate,
)
from .errors import (
    CuspCharError,
    DegeneratePrecision,
    ExpressionSyntaxError,
    IncompleteSequence,
    InsufficientPrecision,
    MaxStepsExceeded,
    NonInjective,
    ParseError,
    SmoothOrInvalid,
    UnknownOrder,
    ZeroDenominator,
)
from .kernels import BACKEND
from .parser import parse_series_expression
from .series import EXACT, TruncSeries

__all__ = [
    "BACKEND",
    "CharSequence",
    "CuspCharError",
    "DegeneratePrecision",
    "EXACT",
    "EngineResult",
    "ExpressionSyntaxError",
    "IncompleteSequence",
    "InsufficientPrecision",
    "MaxStepsExceeded",
    "NonInjective",
    "Parametrization",
    "ParseError",
    "PkTrace",
    "SmoothOrInvalid",
    "TruncSeries",
    "UnknownOrder",
    "ZeroDenominator",
    "analyze",
    "extract_characteristic",
    "p1_step",
    "parse_series_expression",
    "pk_step",
    "recover_coefficient",
    "run_algorithm",
    "validate",
]

__version__ = "0.1.0"
