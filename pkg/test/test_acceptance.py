"""Long-running end-to-end checks of exactness, determinism and benchmark shape."""

import math
import random

import pytest

from floats import random_finite, random_mixed
from src.superaccumulator.accumulators import LargeAccumulator, SmallAccumulator
from src.superaccumulator.baselines import sum_ordered
from src.superaccumulator.bench import GeneratorSpec, gen, run_bench
from src.superaccumulator.fpbits import to_bits
from src.superaccumulator.methods import SumMethod
from src.superaccumulator.oracle import oracle_mean, oracle_round, oracle_sum
from src.superaccumulator.vector import exact_mean, exact_sum, parallel_exact_sum

pytestmark = pytest.mark.slow


def test_random_trials_match_oracle():
    rng = random.Random(1)
    for _ in range(50):
        values = random_finite(rng, 100_000, denormal_share=0.01)
        expected = to_bits(oracle_round(oracle_sum(values)))
        small = SmallAccumulator()
        small.add_array(values)
        large = LargeAccumulator()
        large.add_array(values)
        assert to_bits(small.round()) == expected
        assert to_bits(large.round()) == expected


def test_permutation_invariance():
    rng = random.Random(2)
    values = random_mixed(rng, 10_000)
    expected = {m: to_bits(exact_sum(values, m)) for m in (SumMethod.SMALL, SumMethod.LARGE)}
    assert expected[SumMethod.SMALL] == expected[SumMethod.LARGE]
    for _ in range(20):
        rng.shuffle(values)
        for method, bits in expected.items():
            assert to_bits(exact_sum(values, method)) == bits


def test_overflow_bypass():
    values = [1.5e308, 1.5e308, -1.5e308, -0.5e308]
    expected = oracle_round(oracle_sum(values))
    assert math.isfinite(expected)
    for method in (SumMethod.SMALL, SumMethod.LARGE):
        assert to_bits(exact_sum(values, method)) == to_bits(expected)
    assert sum_ordered(values) == math.inf


@pytest.mark.parametrize("n", [10, 10**2, 10**3, 10**4, 10**5, 10**6])
def test_generator_sums_to_zero(n):
    for permute in (False, True):
        values = gen(GeneratorSpec(n=n, seed=1, permute=permute))
        for method in (SumMethod.SMALL, SumMethod.LARGE):
            assert to_bits(exact_sum(values, method)) == 0


def test_split_merge_determinism():
    rng = random.Random(5)
    values = random_finite(rng, 100_000)
    expected = to_bits(oracle_round(oracle_sum(values)))
    results = {to_bits(parallel_exact_sum(values, parts)) for parts in range(1, 17)}
    assert results == {expected}


def test_exact_mean_trials():
    rng = random.Random(6)
    assert exact_mean([1e15, -1e15, 0.1]) == oracle_mean(oracle_sum([1e15, -1e15, 0.1]), 3)
    for _ in range(1000):
        n = rng.randint(1, 10_000)
        values = random_finite(rng, n) if rng.random() < 0.5 else random_mixed(rng, n)
        expected = to_bits(oracle_mean(oracle_sum(values), n))
        assert to_bits(exact_mean(values)) == expected


def test_performance_shape_is_reported():
    records = run_bench(
        sizes=[10, 100, 100_000],
        methods=[SumMethod.SMALL, SumMethod.LARGE, SumMethod.ORDERED],
        total=200_000,
    )
    timing = {(r.method, r.n): r.ns_per_term for r in records}
    assert all(t > 0 for t in timing.values())
    # Reported, not gated
    print(
        f"n=1e5 large/small {timing['large', 100_000] / timing['small', 100_000]:.2f}, "
        f"large/ordered {timing['large', 100_000] / timing['ordered', 100_000]:.2f}, "
        f"small n=10/n=100 {timing['small', 10] / timing['small', 100]:.2f}"
    )
