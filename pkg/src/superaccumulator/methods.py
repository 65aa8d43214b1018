"""Summation method tags and the registry mapping them to summers."""

from enum import StrEnum
from typing import Callable, Dict, Iterable, Optional

import numpy as np

from .accumulators import LargeAccumulator, SmallAccumulator
from .baselines import sum_kahan, sum_ordered, sum_unordered
from .config import settings

Values = Iterable[float] | np.ndarray
Summer = Callable[[Values], float]


class SumMethod(StrEnum):
    """Summation methods; small and large are exact."""

    SMALL = "small"
    LARGE = "large"
    ORDERED = "ordered"
    UNORDERED = "unordered"
    KAHAN = "kahan"


EXACT_METHODS = (SumMethod.SMALL, SumMethod.LARGE)


def is_exact(method: SumMethod) -> bool:
    """Check if method returns the correctly rounded exact sum."""
    return method in EXACT_METHODS


def parse_method(name: str) -> SumMethod:
    """
    Look up a method by name.

    Raises:
        ValueError: If name is not a known method
    """
    try:
        return SumMethod(name)
    except ValueError:
        known = ", ".join(m.value for m in SumMethod)
        raise ValueError(f"Unknown method '{name}'. Available: {known}") from None


def select_exact_method(n: int) -> SumMethod:
    """Pick the faster exact method for n terms."""
    return SumMethod.LARGE if n >= settings.method_threshold else SumMethod.SMALL


def new_accumulator(method: SumMethod) -> SmallAccumulator | LargeAccumulator:
    """
    Create an empty accumulator for an exact method.

    Raises:
        ValueError: If method is not exact
    """
    if method == SumMethod.SMALL:
        return SmallAccumulator()
    if method == SumMethod.LARGE:
        return LargeAccumulator()
    raise ValueError(f"Method '{method}' is not an exact method")


def sum_small(values: Values) -> float:
    """Exact sum with a small superaccumulator."""
    acc = SmallAccumulator()
    acc.add_array(values)
    return acc.round()


def sum_large(values: Values) -> float:
    """Exact sum with a large superaccumulator."""
    acc = LargeAccumulator()
    acc.add_array(values)
    return acc.round()


class MethodRegistry:
    """Registry for managing summation methods."""

    def __init__(self):
        """Initialize empty registry."""
        self._summers: Dict[SumMethod, Summer] = {}

    def register(self, method: SumMethod, summer: Summer) -> None:
        """
        Register a summer.

        Args:
            method: Method tag
            summer: Callable summing a sequence of floats
        """
        self._summers[method] = summer

    def get(self, method: SumMethod) -> Optional[Summer]:
        """
        Get a registered summer by method tag.

        Returns:
            Summer or None if not registered
        """
        return self._summers.get(method)

    def require(self, method: SumMethod) -> Summer:
        """
        Get a registered summer, failing loudly if it is missing.

        Raises:
            ValueError: If method is not registered
        """
        summer = self._summers.get(method)
        if summer is None:
            raise ValueError(
                f"Method '{method}' not registered. Available: {self.names()}"
            )
        return summer

    def get_all(self) -> Dict[SumMethod, Summer]:
        """Get all registered summers."""
        return self._summers.copy()

    def names(self) -> list[str]:
        """Get the registered method names, in registration order."""
        return [m.value for m in self._summers]

    def __len__(self) -> int:
        return len(self._summers)


def default_registry() -> MethodRegistry:
    """Return a registry holding the five built-in methods."""
    registry = MethodRegistry()
    registry.register(SumMethod.SMALL, sum_small)
    registry.register(SumMethod.LARGE, sum_large)
    registry.register(SumMethod.ORDERED, sum_ordered)
    registry.register(SumMethod.UNORDERED, sum_unordered)
    registry.register(SumMethod.KAHAN, sum_kahan)
    return registry
