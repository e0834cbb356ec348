"""Exact verification toolkit: divisor-class kernels, enumerative degrees,
genus-1 strata and twisted canonical divisors."""

from ._core import (
    check_twisted_graph,
    count_x,
    diff_systems,
    ec_division_count,
    fiber_count,
    theta_degree,
    verify_finite_degree,
    verify_injectivity,
)

__all__ = [
    "check_twisted_graph",
    "count_x",
    "diff_systems",
    "ec_division_count",
    "fiber_count",
    "theta_degree",
    "verify_finite_degree",
    "verify_injectivity",
]
