"""Tests for the inexact baseline summers."""

import math
import random
from functools import reduce

import numpy as np

from src.superaccumulator.baselines import sum_kahan, sum_ordered, sum_unordered
from src.superaccumulator.fpbits import to_bits


def test_ordered():
    assert to_bits(sum_ordered([])) == 0
    assert sum_ordered([1e16, 1.0, -1e16]) == 0.0
    assert sum_ordered([1.7e308, 1.7e308, -1.7e308]) == math.inf


def test_ordered_matches_naive_fold():
    rng = random.Random(1)
    values = [rng.uniform(-1e6, 1e6) * 10.0 ** rng.randint(-20, 20) for _ in range(1000)]
    assert to_bits(sum_ordered(values)) == to_bits(reduce(lambda s, v: s + v, values, 0.0))
    assert to_bits(sum_ordered(np.array(values))) == to_bits(sum_ordered(values))


def test_unordered():
    assert to_bits(sum_unordered([])) == 0
    assert sum_unordered([3.0, 4.0]) == 7.0
    assert sum_unordered([1.0, 1e-16, 1.0, 1e-16]) == (1.0 + 1.0) + (1e-16 + 1e-16)
    # odd length: the last element joins the even-index accumulator
    assert sum_unordered([1e16, 1.0, 1.0]) == (1e16 + 1.0) + 1.0


def test_kahan():
    assert to_bits(sum_kahan([])) == 0
    assert sum_kahan([1.0, 2.0, 3.0]) == 6.0
    assert sum_kahan([1e16, 1.0, -1e16]) == 1.0
    assert sum_kahan([0.1] * 10) == 1.0


def test_kahan_special_values():
    assert sum_kahan([1.0, math.inf]) == math.inf
    assert math.isnan(sum_kahan([math.inf, -math.inf]))
    assert math.isnan(sum_kahan([1.0, math.nan]))


def test_baselines_are_deterministic():
    rng = random.Random(2)
    values = [rng.gauss(0, 1) * 10.0 ** rng.randint(-10, 10) for _ in range(500)]
    for summer in (sum_ordered, sum_unordered, sum_kahan):
        assert to_bits(summer(values)) == to_bits(summer(list(values)))
