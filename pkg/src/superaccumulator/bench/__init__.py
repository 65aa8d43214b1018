"""Benchmark data generation, timing and method comparison."""

from .compare import CompareReport, MethodResult, compare_methods, same_result
from .generator import GeneratorSpec, Mcg, gen, gen_pair
from .harness import (
    BenchOp,
    BenchRecord,
    repetitions_for,
    run_bench,
    write_csv,
    write_plot_data,
)

__all__ = [
    "BenchOp",
    "BenchRecord",
    "CompareReport",
    "GeneratorSpec",
    "Mcg",
    "MethodResult",
    "compare_methods",
    "gen",
    "gen_pair",
    "repetitions_for",
    "run_bench",
    "same_result",
    "write_csv",
    "write_plot_data",
]
