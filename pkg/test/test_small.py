"""Tests for the small (67-chunk) superaccumulator."""

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from floats import finite_doubles, finite_from_fields, random_finite
from src.superaccumulator.accumulators import SmallAccumulator
from src.superaccumulator.accumulators.small import SCHUNKS, SMALL_CARRY_TERMS
from src.superaccumulator.fpbits import MANTISSA_MASK, from_bits, to_bits
from src.superaccumulator.oracle import oracle_mean, oracle_round, oracle_sum, scaled

MAX = 1.7976931348623157e308


def small_sum(values) -> float:
    acc = SmallAccumulator()
    acc.add_array(values)
    return acc.round()


def same_bits(a: float, b: float) -> bool:
    return to_bits(a) == to_bits(b)


def test_new_accumulator():
    acc = SmallAccumulator()
    assert list(acc.chunks) == [0] * SCHUNKS
    assert acc.adds_until_propagate == SMALL_CARRY_TERMS == 2047
    assert same_bits(acc.round(), 0.0)


def test_add_one_lands_in_chunk_32():
    acc = SmallAccumulator()
    acc.add(1.0)
    assert acc.chunks[31] == 0
    assert acc.chunks[32] == 1 << 51
    assert acc.adds_until_propagate == 2046


def test_add_smallest_denormal():
    acc = SmallAccumulator()
    acc.add(5e-324)
    assert acc.chunks[0] == 2
    assert acc.round() == 5e-324


def test_add_negative_zero_is_ignored():
    acc = SmallAccumulator()
    acc.add(-0.0)
    assert list(acc.chunks) == [0] * SCHUNKS
    assert acc.adds_until_propagate == 2047
    assert same_bits(acc.round(), 0.0)


def test_add_array_propagates_within_budget():
    acc = SmallAccumulator()
    acc.add_array([1.0] * 5000)
    assert acc.propagations >= 2
    assert acc.round() == 5000.0


def test_add_array_empty_and_cancellation():
    acc = SmallAccumulator()
    acc.add_array([])
    assert same_bits(acc.round(), 0.0)
    assert small_sum([1e15, -1e15, 0.1]) == 0.1


def test_carry_propagate_examples():
    acc = SmallAccumulator()
    assert acc.carry_propagate() == -1
    assert list(acc.chunks) == [0] * SCHUNKS

    acc.chunks[0] = 1 << 32
    assert acc.carry_propagate() == 1
    assert acc.chunks[0] == 0
    assert acc.chunks[1] == 1


def test_carry_propagate_negative_top_chunk():
    acc = SmallAccumulator()
    acc.add(-1.0)
    u = acc.carry_propagate()
    assert acc.chunks[u] < 0
    assert all(c == 0 for c in acc.chunks[u + 1 :])
    assert acc.round() == -1.0


@given(st.lists(finite_doubles, max_size=60))
def test_propagation_keeps_value_and_bounds(values):
    acc = SmallAccumulator()
    expected = 0
    for v in values:
        acc.add(v)
        expected += 2 * scaled(v)
        assert acc.fixed_point() == expected
    acc.carry_propagate()
    assert acc.fixed_point() == expected
    assert all(abs(c) <= 1 << 32 for c in acc.chunks)
    assert -(1 << 32) <= acc.chunks[SCHUNKS - 1] <= (1 << 32) - 1


def test_inf_nan_handling():
    acc = SmallAccumulator()
    acc.add(math.inf)
    assert acc.round() == math.inf

    acc = SmallAccumulator()
    acc.add(math.inf)
    acc.add(-math.inf)
    assert math.isnan(acc.round())

    acc = SmallAccumulator()
    acc.add(1.0)
    acc.add(from_bits(0x7FF8000000000042))
    acc.add(math.inf)
    acc.add(from_bits(0x7FF8000000000099))
    assert to_bits(acc.round()) == 0x7FF8000000000042


def test_add_inf_nan_rejects_finite_patterns():
    with pytest.raises(ValueError):
        SmallAccumulator().add_inf_nan(to_bits(1.0))


def test_round_examples():
    assert small_sum([1e16, 1.0, -1e16]) == 1.0
    assert small_sum([MAX, MAX]) == math.inf
    assert small_sum([-MAX, -MAX]) == -math.inf
    assert small_sum([MAX, MAX, -MAX]) == MAX
    assert small_sum([1.0, 2.0**-53]) == 1.0
    assert small_sum([1.0, 2.0**-53, 2.0**-1074]) == 1.0 + 2.0**-52
    assert small_sum([-1.0, -(2.0**-53), -(2.0**-1074)]) == -(1.0 + 2.0**-52)


@given(finite_doubles)
def test_round_single_value(v):
    expected = 0.0 if v == 0 else v
    assert same_bits(small_sum([v]), expected)


def test_round_leaves_state_usable():
    acc = SmallAccumulator()
    acc.add_array([0.1, 0.2])
    first = acc.round()
    acc.add(0.3)
    assert acc.round() == oracle_round(oracle_sum([0.1, 0.2, 0.3]))
    assert first == oracle_round(oracle_sum([0.1, 0.2]))


@given(st.lists(finite_doubles, max_size=200))
def test_round_matches_oracle(values):
    assert same_bits(small_sum(values), oracle_round(oracle_sum(values)))


def test_round_matches_oracle_with_denormals(rng):
    for _ in range(20):
        values = random_finite(rng, 2000, denormal_share=0.3)
        assert same_bits(small_sum(values), oracle_round(oracle_sum(values)))


def test_budget_stress_never_wraps():
    # low 5 exponent bits all ones: the high piece gets the whole 52-bit mantissa top
    v = finite_from_fields(0, 32 * 20 + 31, MANTISSA_MASK)
    acc = SmallAccumulator()
    shadow = 0
    for _ in range(SMALL_CARRY_TERMS):
        acc.add(v)
        shadow += 2 * scaled(v)
    assert acc.propagations == 0
    assert acc.adds_until_propagate == 0
    assert acc.fixed_point() == shadow
    assert max(abs(c) for c in acc.chunks) < 1 << 63

    acc.add(v)
    assert acc.propagations == 1
    assert acc.fixed_point() == shadow + 2 * scaled(v)


def test_budget_stress_negative():
    v = finite_from_fields(1, 32 * 5 + 31, MANTISSA_MASK)
    acc = SmallAccumulator()
    acc.add_array([v] * (3 * SMALL_CARRY_TERMS))
    assert acc.round() == oracle_round(oracle_sum([v] * (3 * SMALL_CARRY_TERMS)))


def test_merge():
    a, b = SmallAccumulator(), SmallAccumulator()
    a.merge(b)
    assert same_bits(a.round(), 0.0)

    rng = random.Random(7)
    xs = random_finite(rng, 500)
    ys = random_finite(rng, 700)
    a.add_array(xs)
    b.add_array(ys)
    a.merge(b)
    assert same_bits(a.round(), small_sum(xs + ys))
    assert same_bits(b.round(), small_sum(ys))


def test_merge_infinities():
    a, b = SmallAccumulator(), SmallAccumulator()
    a.add(math.inf)
    b.add(-math.inf)
    a.merge(b)
    assert math.isnan(a.round())


def test_merge_many_without_overflow():
    total = SmallAccumulator()
    part = SmallAccumulator()
    part.add_array([MAX] * 10)
    for _ in range(5000):
        total.merge(part)
    assert total.fixed_point() == 50000 * 2 * scaled(MAX)


def test_copy_is_independent():
    acc = SmallAccumulator()
    acc.add(1.0)
    dup = acc.copy()
    dup.add(1.0)
    assert acc.round() == 1.0
    assert dup.round() == 2.0


def test_mean_examples():
    acc = SmallAccumulator()
    acc.add(6.0)
    assert acc.mean(3) == 2.0

    acc = SmallAccumulator()
    acc.add(1.0)
    assert acc.mean(3) == 1.0 / 3.0

    acc = SmallAccumulator()
    acc.add_array([1e15, -1e15, 0.1])
    assert acc.mean(3) == oracle_mean(oracle_sum([0.1]), 3)

    with pytest.raises(ValueError):
        SmallAccumulator().mean(0)


def test_mean_specials_and_denormals():
    acc = SmallAccumulator()
    acc.add(-math.inf)
    assert acc.mean(4) == -math.inf

    acc = SmallAccumulator()
    acc.add(5e-324)
    assert same_bits(acc.mean(2), 0.0)  # half of the smallest denormal ties to even (zero)
    acc.add(2 * 5e-324)
    assert acc.mean(2) == 2 * 5e-324  # 1.5 units rounds to 2

    acc = SmallAccumulator()
    acc.add(-(5e-324))
    assert same_bits(acc.mean(2), -0.0)


@given(st.lists(finite_doubles, min_size=1, max_size=100), st.integers(1, 10**6))
def test_mean_matches_oracle(values, n):
    acc = SmallAccumulator()
    acc.add_array(values)
    assert same_bits(acc.mean(n), oracle_mean(oracle_sum(values), n))
