"""Exact and baseline sums, means, squared norms and dot products."""

from typing import Optional

import numpy as np

from ..methods import (
    SumMethod,
    Values,
    default_registry,
    is_exact,
    new_accumulator,
    select_exact_method,
)

_registry = default_registry()


def as_float_array(values: Values) -> np.ndarray:
    """Return values as a 1-D float64 array without copying when possible."""
    if isinstance(values, np.ndarray):
        return values.astype(np.float64, copy=False).ravel()
    if isinstance(values, (list, tuple)):
        return np.asarray(values, dtype=np.float64)
    return np.fromiter(values, dtype=np.float64)


def _exact_method(method: Optional[SumMethod], n: int) -> SumMethod:
    if method is None:
        return select_exact_method(n)
    if not is_exact(method):
        raise ValueError(f"Method '{method}' is not an exact method")
    return method


def exact_sum(values: Values, method: Optional[SumMethod] = None) -> float:
    """
    Return the correctly rounded exact sum of values.

    Args:
        values: Floats to sum
        method: small or large; chosen from the term count when omitted

    Returns:
        The sum rounded to nearest, ties to even

    Raises:
        ValueError: If method is not exact
    """
    arr = as_float_array(values)
    acc = new_accumulator(_exact_method(method, len(arr)))
    acc.add_array(arr)
    return acc.round()


def exact_mean(values: Values, method: Optional[SumMethod] = None) -> float:
    """
    Return the correctly rounded exact mean of values.

    Raises:
        ValueError: If values is empty or method is not exact
    """
    arr = as_float_array(values)
    if len(arr) == 0:
        raise ValueError("Mean of an empty sequence is undefined")
    acc = new_accumulator(_exact_method(method, len(arr)))
    acc.add_array(arr)
    return acc.mean(len(arr))


def method_sum(values: Values, method: Optional[SumMethod] = None) -> float:
    """
    Sum values with method; exact (chosen by size) when method is omitted.

    Raises:
        ValueError: If method is not registered
    """
    if method is None or is_exact(method):
        return exact_sum(values, method)
    return _registry.require(method)(values)


def sqnorm(values: Values, method: Optional[SumMethod] = None) -> float:
    """
    Return the sum of squares of values.

    Each square is one rounded multiply; the squares are then summed with
    method (exact when omitted).
    """
    arr = as_float_array(values)
    return method_sum(arr * arr, method)


def dot(a: Values, b: Values, method: Optional[SumMethod] = None) -> float:
    """
    Return the sum of products of corresponding elements of a and b.

    Each product is one rounded multiply; the products are then summed
    with method (exact when omitted).

    Raises:
        ValueError: If a and b differ in length
    """
    x = as_float_array(a)
    y = as_float_array(b)
    if len(x) != len(y):
        raise ValueError(f"Vector lengths differ: {len(x)} != {len(y)}")
    return method_sum(x * y, method)
