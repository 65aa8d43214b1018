"""Inexact baseline summation methods.

These follow IEEE double arithmetic step by step and must not be run
under settings that allow reassociation of floating-point adds.
"""

import math
from typing import Iterable, List

import numpy as np


def _as_floats(values: Iterable[float] | np.ndarray) -> List[float]:
    if isinstance(values, np.ndarray):
        return values.tolist()
    return values if isinstance(values, list) else list(values)


def sum_ordered(values: Iterable[float] | np.ndarray) -> float:
    """Add each term in turn to one double accumulator."""
    total = 0.0
    for v in _as_floats(values):
        total += v
    return total


def sum_unordered(values: Iterable[float] | np.ndarray) -> float:
    """
    Sum even- and odd-indexed terms in separate accumulators, then add them.

    With an odd length the last term goes to the even accumulator.
    """
    terms = _as_floats(values)
    n = len(terms)
    even = 0.0
    odd = 0.0
    for i in range(0, n - 1, 2):
        even += terms[i]
        odd += terms[i + 1]
    if n & 1:
        even += terms[n - 1]
    return even + odd


def sum_kahan(values: Iterable[float] | np.ndarray) -> float:
    """
    Compensated summation: a running sum plus a running correction term.

    Uses Neumaier's form of Kahan's method, which also captures the error
    when the incoming term is larger than the running sum. The correction
    is added once at the end.
    """
    total = 0.0
    compensation = 0.0
    for v in _as_floats(values):
        t = total + v
        if abs(total) >= abs(v):
            compensation += (total - t) + v
        else:
            compensation += (v - t) + total
        total = t
    if not math.isfinite(total):
        return total
    return total + compensation
