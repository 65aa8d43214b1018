"""Deterministic benchmark data: mirrored U1 * exp(30 * U2) terms.

The first half of the array holds independent terms, the second half
their negations in mirror order, so the exact sum is zero. exp is
evaluated in decimal arithmetic and rounded once to a double, which keeps
the stream bit-identical on every platform (libm exp is not).
"""

from decimal import Context, Decimal
from typing import List

import numpy as np
from pydantic import BaseModel, Field, field_validator

MCG_MODULUS = (1 << 31) - 1
MCG_MULTIPLIER = 48271

_EXP_CONTEXT = Context(prec=40)


class GeneratorSpec(BaseModel):
    """Parameters of a generated benchmark array."""

    n: int = Field(gt=0, description="Number of terms (even, for mirroring)")
    seed: int = Field(default=1, ge=0, lt=1 << 64, description="Generator seed")
    permute: bool = Field(default=False, description="Randomly permute the terms")

    @field_validator("n")
    @classmethod
    def _check_even(cls, n: int) -> int:
        if n % 2:
            raise ValueError(f"n must be even so terms can be mirrored, got {n}")
        return n


class Mcg:
    """Multiplicative congruential generator x <- a*x mod m (MINSTD constants)."""

    def __init__(self, seed: int):
        self.state = seed % MCG_MODULUS or 1

    def next_int(self) -> int:
        """Advance and return the state, in [1, m - 1]."""
        self.state = (MCG_MULTIPLIER * self.state) % MCG_MODULUS
        return self.state

    def uniform(self) -> float:
        """Return a value uniform on (0, 1)."""
        return self.next_int() / MCG_MODULUS


def _exp(x: float) -> float:
    return float(Decimal(x).exp(_EXP_CONTEXT))


def gen_terms(rng: Mcg, n: int) -> List[float]:
    """Draw n mirrored terms from rng."""
    half = n // 2
    terms = [0.0] * n
    for i in range(half):
        u1 = rng.uniform()
        u2 = rng.uniform()
        v = u1 * _exp(30.0 * u2)
        terms[i] = v
        terms[n - 1 - i] = -v
    return terms


def permute_terms(rng: Mcg, terms: List[float]) -> None:
    """Shuffle terms in place (Fisher-Yates) from the rng stream."""
    for i in range(len(terms) - 1, 0, -1):
        j = rng.next_int() % (i + 1)
        terms[i], terms[j] = terms[j], terms[i]


def gen(spec: GeneratorSpec) -> np.ndarray:
    """
    Generate a benchmark array whose exact sum is zero.

    Args:
        spec: Size, seed and permutation flag

    Returns:
        float64 array; identical seeds give identical bits
    """
    rng = Mcg(spec.seed)
    terms = gen_terms(rng, spec.n)
    if spec.permute:
        permute_terms(rng, terms)
    return np.array(terms, dtype=np.float64)


def gen_pair(spec: GeneratorSpec) -> tuple[np.ndarray, np.ndarray]:
    """Generate two vectors from one continuing stream (for dot products)."""
    rng = Mcg(spec.seed)
    first = gen_terms(rng, spec.n)
    second = gen_terms(rng, spec.n)
    if spec.permute:
        permute_terms(rng, first)
        permute_terms(rng, second)
    return np.array(first, dtype=np.float64), np.array(second, dtype=np.float64)
