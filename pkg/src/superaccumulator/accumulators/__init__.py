"""Exact accumulators module initialization."""

from .base import ExactAccumulator
from .large import LargeAccumulator
from .small import SmallAccumulator

__all__ = [
    "ExactAccumulator",
    "LargeAccumulator",
    "SmallAccumulator",
]
