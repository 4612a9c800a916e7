"""Exact counts of binary matrices with prescribed row/column sums.

Thin Python face over the C++ core: partition utilities, the margin-count
table N(p,q), Stirling rows, symmetric-function evaluation, and the
alternating moment statistic R_m (exact and Monte Carlo).
"""

from npq._core import (
    __version__,
    conjugate,
    count,
    count_bruteforce,
    double_factorial_odd,
    elementary_symmetric,
    enumerate_partitions,
    factorial_product,
    full_table,
    monomial_symmetric,
    multiplicity_factorial,
    multiplicity_vector,
    rm_direct,
    rm_exact_moment,
    rm_monte_carlo,
    stirling_first,
    stirling_second,
    verify,
    verify_e2m,
)

__all__ = [
    "__version__",
    "conjugate",
    "count",
    "count_bruteforce",
    "double_factorial_odd",
    "elementary_symmetric",
    "enumerate_partitions",
    "factorial_product",
    "full_table",
    "monomial_symmetric",
    "multiplicity_factorial",
    "multiplicity_vector",
    "rm_direct",
    "rm_exact_moment",
    "rm_monte_carlo",
    "stirling_first",
    "stirling_second",
    "verify",
    "verify_e2m",
]
