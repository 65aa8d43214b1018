"""Split-merge summation: exact partial sums per segment, merged at the end."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from ..accumulators import SmallAccumulator
from ..config import settings
from ..methods import new_accumulator, select_exact_method
from .ops import Values, as_float_array

logger = logging.getLogger(__name__)


def plan_segments(n: int, parts: int) -> List[Tuple[int, int]]:
    """
    Split range(n) into parts contiguous (start, stop) segments.

    Segment sizes differ by at most one; some are empty when parts > n.

    Raises:
        ValueError: If parts < 1
    """
    if parts < 1:
        raise ValueError(f"Number of parts must be positive, got {parts}")
    bounds = [i * n // parts for i in range(parts + 1)]
    return list(zip(bounds[:-1], bounds[1:]))


def _sum_segment(segment: np.ndarray) -> SmallAccumulator:
    acc = new_accumulator(select_exact_method(len(segment)))
    acc.add_array(segment)
    return acc.to_small()


def combine_segments(
    values: Values,
    parts: Optional[int] = None,
    workers: Optional[int] = None,
) -> SmallAccumulator:
    """
    Sum each segment into its own accumulator and merge them in order.

    Args:
        values: Floats to sum
        parts: Number of segments (default: settings.parallel_parts)
        workers: Worker threads (default: settings.parallel_workers)

    Returns:
        Small accumulator holding the exact total
    """
    parts = settings.parallel_parts if parts is None else parts
    workers = settings.parallel_workers if workers is None else workers
    arr = as_float_array(values)
    segments = [arr[start:stop] for start, stop in plan_segments(len(arr), parts)]

    if workers > 1 and len(segments) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_sum_segment, segments))
    else:
        partials = [_sum_segment(segment) for segment in segments]

    total = SmallAccumulator()
    for partial in partials:
        total.merge(partial)

    logger.debug(
        f"Merged {len(partials)} partial sums of {len(arr)} terms "
        f"(workers={workers}, propagations={sum(p.propagations for p in partials)})"
    )
    return total


def parallel_exact_sum(
    values: Values,
    parts: Optional[int] = None,
    workers: Optional[int] = None,
) -> float:
    """
    Return the correctly rounded exact sum via split-merge.

    The result is bit-identical for every number of parts and workers.
    """
    return combine_segments(values, parts, workers).round()


def parallel_exact_mean(
    values: Values,
    parts: Optional[int] = None,
    workers: Optional[int] = None,
) -> float:
    """
    Return the correctly rounded exact mean via split-merge.

    Raises:
        ValueError: If values is empty
    """
    arr = as_float_array(values)
    if len(arr) == 0:
        raise ValueError("Mean of an empty sequence is undefined")
    return combine_segments(arr, parts, workers).mean(len(arr))
