"""Timing harness: nanoseconds per term for each (method, N)."""

import csv
import logging
import time
from enum import StrEnum
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from ..fpbits import to_bits
from ..methods import MethodRegistry, SumMethod, default_registry, is_exact
from ..vector import dot, parallel_exact_sum, sqnorm
from .generator import GeneratorSpec, gen, gen_pair

logger = logging.getLogger(__name__)

CSV_HEADER = ["method", "n", "repetitions", "ns_per_term", "result_bits"]


class BenchOp(StrEnum):
    """Operation timed by the harness."""

    SUM = "sum"
    SQNORM = "sqnorm"
    DOT = "dot"


class BenchRecord(BaseModel):
    """Timing of one method at one array size."""

    method: str
    n: int = Field(gt=0)
    repetitions: int = Field(gt=0)
    ns_per_term: float = Field(ge=0)
    result_bits: int = Field(ge=0, lt=1 << 64)

    def csv_row(self) -> List[str]:
        return [
            self.method,
            str(self.n),
            str(self.repetitions),
            f"{self.ns_per_term:.3f}",
            f"0x{self.result_bits:016X}",
        ]


def repetitions_for(n: int, total: int) -> int:
    """Number of repetitions so that about total terms are summed."""
    return max(1, total // n)


def time_repetitions(
    run: Callable[[], float], repetitions: int
) -> tuple[int, float]:
    """
    Call run repetitions times under a monotonic clock.

    Returns:
        (elapsed nanoseconds, last result)
    """
    result = 0.0
    start = time.perf_counter_ns()
    for _ in range(repetitions):
        result = run()
    return time.perf_counter_ns() - start, result


def _runner(
    op: BenchOp,
    method: SumMethod,
    registry: MethodRegistry,
    data: tuple[np.ndarray, np.ndarray],
) -> Callable[[], float]:
    x, y = data
    if op == BenchOp.SQNORM:
        return lambda: sqnorm(x, method)
    if op == BenchOp.DOT:
        return lambda: dot(x, y, method)
    summer = registry.require(method)
    return lambda: summer(x)


def _check_exact_bits(records: Sequence[BenchRecord]) -> None:
    by_method: Dict[str, set[int]] = {}
    for r in records:
        by_method.setdefault(r.method, set()).add(r.result_bits)
    for method, bits in by_method.items():
        if len(bits) > 1:
            logger.warning(
                f"Exact method '{method}' gave {len(bits)} different results across sizes"
            )


def run_bench(
    sizes: Sequence[int],
    methods: Sequence[SumMethod],
    total: int,
    seed: int = 1,
    permute: bool = False,
    op: BenchOp = BenchOp.SUM,
    parts: Optional[int] = None,
    registry: Optional[MethodRegistry] = None,
) -> List[BenchRecord]:
    """
    Time every method on generated arrays of each size.

    Data is generated once per size, outside the timed region. Each
    (method, N) pair sums the same array max(1, total // N) times.

    Args:
        sizes: Array sizes (even, for mirrored data)
        methods: Methods to time, in output order
        total: Terms summed per (method, N)
        seed: Generator seed
        permute: Permute the generated arrays
        op: sum, sqnorm or dot
        parts: Also time split-merge summation with this many parts
        registry: Summers for plain sums (default: the built-ins)

    Returns:
        One record per (method, N), methods outermost

    Raises:
        ValueError: If sizes is empty or invalid, or total < max(sizes)
    """
    if not sizes:
        raise ValueError("At least one size is required")
    if min(sizes) < 1:
        raise ValueError(f"Sizes must be positive, got {list(sizes)}")
    if total < max(sizes):
        raise ValueError(f"Total terms {total} is less than the largest size {max(sizes)}")
    if parts is not None and op != BenchOp.SUM:
        raise ValueError("Split-merge timing is only available for op 'sum'")

    registry = default_registry() if registry is None else registry
    data: Dict[int, tuple[np.ndarray, np.ndarray]] = {}
    for n in sizes:
        spec = GeneratorSpec(n=n, seed=seed, permute=permute)
        if op == BenchOp.DOT:
            data[n] = gen_pair(spec)
        else:
            x = gen(spec)
            data[n] = (x, x)

    labels: List[str] = [m.value for m in methods]
    parallel_label = f"parallel{parts}" if parts is not None else None
    if parallel_label:
        labels.append(parallel_label)

    def make_runner(label: str, n: int) -> Callable[[], float]:
        if label == parallel_label:
            x = data[n][0]
            return lambda: parallel_exact_sum(x, parts)
        return _runner(op, SumMethod(label), registry, data[n])

    records: List[BenchRecord] = []
    for label in labels:
        exact = label == parallel_label or is_exact(SumMethod(label))
        exact_records = []
        for n in sizes:
            repetitions = repetitions_for(n, total)
            elapsed, result = time_repetitions(make_runner(label, n), repetitions)
            record = BenchRecord(
                method=label,
                n=n,
                repetitions=repetitions,
                ns_per_term=elapsed / (repetitions * n),
                result_bits=to_bits(result),
            )
            logger.info(
                f"{op} {label} n={n}: {record.ns_per_term:.2f} ns/term "
                f"({repetitions} repetitions)"
            )
            records.append(record)
            if exact:
                exact_records.append(record)
        if op == BenchOp.SUM:
            _check_exact_bits(exact_records)

    return records


def write_csv(records: Sequence[BenchRecord], path: Path) -> None:
    """Write records as CSV with a fixed header."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(r.csv_row())


def write_plot_data(records: Sequence[BenchRecord], path: Path) -> None:
    """
    Write a gnuplot data file: one indexed block per method, 'n ns_per_term' rows.

    Plot with: plot for [i=0:*] 'file' index i using 1:2 with linespoints title columnheader(1)
    """
    blocks: Dict[str, List[BenchRecord]] = {}
    for r in records:
        blocks.setdefault(r.method, []).append(r)

    with open(path, "w", encoding="utf-8") as f:
        for i, (method, rows) in enumerate(blocks.items()):
            if i:
                f.write("\n\n")
            f.write(f"{method}\n")
            for r in rows:
                f.write(f"{r.n} {r.ns_per_term:.3f}\n")
