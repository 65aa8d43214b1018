"""Vector operations built on the accumulators."""

from .ops import as_float_array, dot, exact_mean, exact_sum, method_sum, sqnorm
from .parallel import parallel_exact_mean, parallel_exact_sum, plan_segments

__all__ = [
    "as_float_array",
    "dot",
    "exact_mean",
    "exact_sum",
    "method_sum",
    "parallel_exact_mean",
    "parallel_exact_sum",
    "plan_segments",
    "sqnorm",
]
