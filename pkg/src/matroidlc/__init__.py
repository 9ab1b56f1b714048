"""Exact matroid and polynomial tools for checking log-concavity inequalities
of independent-set polynomials on small matroids."""

__version__ = "0.1.0"

from .matroid import (  # noqa: E402
    AxiomViolationError,
    InvalidParameterError,
    Matroid,
    MinorDescriptor,
    contract,
    delete,
    dual,
    independents_of_size,
    make_explicit,
    make_graphic,
    make_linear,
    make_uniform,
    minor,
    parallel_extension,
    partition_minor,
    rank,
    restrict,
)
from .poly import MultiPoly, coefficient, dominates, evaluate, partial_derivative, poly_mul, substitute_zero  # noqa: E402
from .collapse import collapse_H, collapse_S, f_k, g_polynomial, pi_tuple  # noqa: E402
