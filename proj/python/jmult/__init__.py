"""Exact generalized Hilbert coefficients, j-multiplicity and first
coefficient ideals of monomial ideals."""

from jmult._jmult import (
    Ideal,
    JmultError,
    cache_stats,
    classical_coefficients,
    clear_cache,
    coefficients,
    compare_localized,
    cq_cross_check,
    dimension_of_n,
    fci_contains,
    first_coefficient_ideal,
    height,
    integral_closure,
    is_reduction,
    localize,
    minimal_primes,
    table,
    __version__,
)

__all__ = [
    "Ideal",
    "JmultError",
    "cache_stats",
    "classical_coefficients",
    "clear_cache",
    "coefficients",
    "compare_localized",
    "cq_cross_check",
    "dimension_of_n",
    "fci_contains",
    "first_coefficient_ideal",
    "height",
    "integral_closure",
    "is_reduction",
    "localize",
    "minimal_primes",
    "table",
    "__version__",
]
