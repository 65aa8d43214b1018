"""Base protocol for exact accumulators."""

from typing import Iterable, Protocol, TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .small import SmallAccumulator


class ExactAccumulator(Protocol):
    """Protocol shared by the small and large superaccumulators."""

    def add(self, value: float) -> None:
        """Add one value exactly."""
        ...

    def add_array(self, values: Iterable[float] | np.ndarray) -> None:
        """Add every element of values exactly, in order."""
        ...

    def round(self) -> float:
        """Return the exact sum rounded to nearest, ties to even."""
        ...

    def mean(self, n: int) -> float:
        """Return the exact sum divided by n, correctly rounded."""
        ...

    def to_small(self) -> "SmallAccumulator":
        """Return a small accumulator holding the same exact value."""
        ...
