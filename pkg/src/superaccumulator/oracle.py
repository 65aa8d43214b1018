"""Arbitrary-precision reference sums used to check the accumulators.

Values are held as integer multiples of 2^-1074, the spacing of the
smallest denormal, so every finite double is represented without error.
Rounding relies on Python's int / int true division, which is correctly
rounded (ties to even, denormals included) and shares no code with the
accumulators.

Not exported from the package root: this is test and comparison tooling.
"""

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

SCALE_EXP = 1074
SCALE = 1 << SCALE_EXP


@dataclass(frozen=True)
class ExactValue:
    """Exact sum with IEEE special-value state."""

    numerator: int = 0
    inf_sign: int = 0  # -1, 0 or +1
    has_nan: bool = False

    def __add__(self, other: "ExactValue") -> "ExactValue":
        inf_sign = self.inf_sign or other.inf_sign
        has_nan = (
            self.has_nan
            or other.has_nan
            or (self.inf_sign != 0 and other.inf_sign != 0 and self.inf_sign != other.inf_sign)
        )
        return ExactValue(
            numerator=self.numerator + other.numerator,
            inf_sign=inf_sign,
            has_nan=has_nan,
        )


def scaled(v: float) -> int:
    """Return the finite value v as an integer multiple of 2^-1074."""
    p, q = v.as_integer_ratio()
    return p * (SCALE // q)


def oracle_sum(values: Iterable[float] | np.ndarray) -> ExactValue:
    """
    Sum values exactly.

    Any NaN, or infinities of both signs, make the result NaN.
    """
    if isinstance(values, np.ndarray):
        values = values.tolist()

    numerator = 0
    pos_inf = False
    neg_inf = False
    has_nan = False
    for v in values:
        if math.isnan(v):
            has_nan = True
        elif math.isinf(v):
            if v > 0:
                pos_inf = True
            else:
                neg_inf = True
        else:
            numerator += scaled(v)

    if pos_inf and neg_inf:
        has_nan = True
    inf_sign = 1 if pos_inf else (-1 if neg_inf else 0)
    return ExactValue(numerator=numerator, inf_sign=inf_sign, has_nan=has_nan)


def _round_ratio(num: int, den: int) -> float:
    try:
        return num / den
    except OverflowError:
        return math.inf if num > 0 else -math.inf


def oracle_round(ev: ExactValue) -> float:
    """Round an exact value to the nearest double, ties to even; exact zero is +0.0."""
    if ev.has_nan:
        return math.nan
    if ev.inf_sign:
        return math.copysign(math.inf, ev.inf_sign)
    if ev.numerator == 0:
        return 0.0
    return _round_ratio(ev.numerator, SCALE)


def oracle_mean(ev: ExactValue, n: int) -> float:
    """
    Return ev / n correctly rounded.

    Raises:
        ValueError: If n is not positive
    """
    if n < 1:
        raise ValueError(f"Mean requires a positive count, got {n}")
    if ev.has_nan or ev.inf_sign:
        return oracle_round(ev)
    if ev.numerator == 0:
        return 0.0
    return _round_ratio(ev.numerator, SCALE * n)
