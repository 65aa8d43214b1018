"""Run every registered method plus the oracle over one input."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..fpbits import to_bits
from ..methods import MethodRegistry, Values, default_registry, is_exact
from ..oracle import oracle_round, oracle_sum
from ..vector import as_float_array

logger = logging.getLogger(__name__)

def same_result(a: float, b: float) -> bool:
    """Check if two results agree: identical bits, or both NaN (payloads may differ)."""
    if a != a and b != b:
        return True
    return to_bits(a) == to_bits(b)


@dataclass
class MethodResult:
    """One method's result in a comparison."""
    method: str
    value: float
    exact: bool
    agrees: bool


@dataclass
class CompareReport:
    """Results of all methods on the same input."""
    n: int
    oracle: float
    results: List[MethodResult] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """True if every exact method matches the oracle."""
        return all(r.agrees for r in self.results if r.exact)

    @property
    def mismatches(self) -> List[MethodResult]:
        return [r for r in self.results if r.exact and not r.agrees]


def compare_methods(
    values: Values,
    registry: Optional[MethodRegistry] = None,
) -> CompareReport:
    """
    Sum values with every registered method and check the exact ones.

    Baseline results are reported as they are; agreement is recorded for
    them too but never makes the report inconsistent.

    Args:
        values: Floats to sum
        registry: Methods to run (default: the five built-ins)

    Returns:
        CompareReport with one entry per method
    """
    registry = default_registry() if registry is None else registry
    values = as_float_array(values)
    oracle = oracle_round(oracle_sum(values))
    report = CompareReport(n=len(values), oracle=oracle)

    for method, summer in registry.get_all().items():
        value = summer(values)
        report.results.append(
            MethodResult(
                method=method.value,
                value=value,
                exact=is_exact(method),
                agrees=same_result(value, oracle),
            )
        )

    for r in report.mismatches:
        logger.error(
            f"Exact method '{r.method}' returned 0x{to_bits(r.value):016X}, "
            f"oracle 0x{to_bits(oracle):016X}"
        )
    return report
