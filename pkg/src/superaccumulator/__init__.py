"""Exact, correctly rounded summation of IEEE-754 doubles with superaccumulators."""

__version__ = "0.1.0"
