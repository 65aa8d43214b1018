"""Large superaccumulator: one 64-bit chunk per sign and exponent combination.

Each chunk sums the raw bit patterns of up to 4096 values sharing its
sign and exponent. The sign/exponent bits added along the way are known
from the chunk index and the count, so they are cancelled when the chunk
is transferred to the embedded small superaccumulator.
"""

import logging
from array import array
from typing import Iterable

import numpy as np

from ..fpbits import EXP_MASK, MANTISSA_BITS, MASK64, bits_of, to_bits
from .small import (
    LOW_EXP_BITS,
    LOW_EXP_MASK,
    LOW_MANTISSA_BITS,
    LOW_MANTISSA_MASK,
    SmallAccumulator,
)

logger = logging.getLogger(__name__)

LCHUNKS = 4096
LARGE_CARRY_TERMS = 4096
USED_WORDS = LCHUNKS // 64
SIGN_INDEX_BIT = 1 << 11

# Budget units a transfer takes from the small accumulator (three chunks touched)
TRANSFER_BUDGET = 3


class LargeAccumulator:
    """Exact accumulator with 4096 chunks, per-chunk counts and used flags."""

    def __init__(self):
        # Chunk words are only read after the first-use path has zeroed them
        self.chunks = array("Q", [0]) * LCHUNKS
        self.counts = array("h", [-1]) * LCHUNKS
        self.chunks_used = array("Q", [0]) * USED_WORDS
        self.used_used = 0
        self.small = SmallAccumulator()
        self.transfers = 0

    def add(self, value: float) -> None:
        """Add one value exactly."""
        self.add_bits(to_bits(value))

    def add_bits(self, bits: int) -> None:
        """Add the float whose bit pattern is bits."""
        ix = bits >> MANTISSA_BITS
        count = self.counts[ix] - 1
        if count < 0:
            self.add_special(ix, bits)
        else:
            self.counts[ix] = count
            self.chunks[ix] = (self.chunks[ix] + bits) & MASK64

    def add_array(self, values: Iterable[float] | np.ndarray) -> None:
        """
        Add every element of values, in order.

        Args:
            values: Floats to add
        """
        counts = self.counts
        chunks = self.chunks
        for bits in bits_of(values):
            ix = bits >> MANTISSA_BITS
            count = counts[ix] - 1
            if count < 0:
                self.add_special(ix, bits)
            else:
                counts[ix] = count
                chunks[ix] = (chunks[ix] + bits) & MASK64

    def add_special(self, ix: int, bits: int) -> None:
        """
        Handle an add whose decremented count went negative.

        Covers three rare cases: an Inf/NaN index (forwarded to the small
        accumulator, count stays -1), a chunk's first use, and a chunk that
        already holds 4096 adds and must be transferred first.

        Args:
            ix: Sign and exponent bits of the value
            bits: Full bit pattern of the value
        """
        if ix & EXP_MASK == EXP_MASK:
            self.small.add_inf_nan(bits)
            return

        if self.counts[ix] < 0:
            self.chunks_used[ix >> 6] |= 1 << (ix & 63)
            self.used_used |= 1 << (ix >> 6)
        else:
            self.transfer_chunk(ix)
        self.chunks[ix] = 0
        self.counts[ix] = LARGE_CARRY_TERMS

        self.counts[ix] -= 1
        self.chunks[ix] = bits

    def decode_chunk(self, ix: int) -> tuple[int, int]:
        """
        Return the mantissa-field sum held in chunk ix and its number of adds.

        Args:
            ix: Chunk index with count in [0, 4096]

        Returns:
            (mantissa sum, adds) with the sign/exponent contribution removed
        """
        count = self.counts[ix]
        chunk = self.chunks[ix]
        if count > 0:
            chunk = (chunk + ((ix * count) << MANTISSA_BITS)) & MASK64
        return chunk, LARGE_CARRY_TERMS - count

    def chunk_value(self, ix: int) -> int:
        """Return the exact value of chunk ix as an integer multiple of 2^-1075."""
        if self.counts[ix] < 0:
            return 0
        mantissa_sum, adds = self.decode_chunk(ix)
        exp = ix & EXP_MASK
        if exp:
            mantissa_sum += adds << MANTISSA_BITS
        else:
            exp = 1
        value = mantissa_sum << exp
        return -value if ix & SIGN_INDEX_BIT else value

    def fixed_point(self) -> int:
        """Return the represented finite value as an integer multiple of 2^-1075."""
        total = self.small.fixed_point()
        for ix in range(LCHUNKS):
            if self.counts[ix] >= 0:
                total += self.chunk_value(ix)
        return total

    def transfer_chunk(self, ix: int) -> None:
        """
        Move the sum held in chunk ix into the small accumulator.

        The 64-bit mantissa sum, shifted by the low 5 exponent bits, is
        applied as three 32-bit pieces to consecutive small chunks using
        shifts of at most 64 bits. For normalized exponents the implicit 1
        bits (one per add) land at bit 52 + low_exp of that window.

        Args:
            ix: Chunk index with count in [0, 4096]
        """
        mantissa_sum, adds = self.decode_chunk(ix)
        exp = ix & EXP_MASK
        normalized = exp != 0
        if not normalized:
            exp = 1

        low_exp = exp & LOW_EXP_MASK
        high_exp = exp >> LOW_EXP_BITS

        low = (mantissa_sum << low_exp) & LOW_MANTISSA_MASK
        mid = (mantissa_sum >> (LOW_MANTISSA_BITS - low_exp)) & LOW_MANTISSA_MASK
        high = mantissa_sum >> (64 - low_exp)
        if normalized:
            implicit = adds << (MANTISSA_BITS - LOW_MANTISSA_BITS + low_exp)
            mid += implicit & LOW_MANTISSA_MASK
            high += implicit >> LOW_MANTISSA_BITS

        small = self.small
        if small.adds_until_propagate < TRANSFER_BUDGET:
            small.carry_propagate()
        chunks = small.chunks
        if ix & SIGN_INDEX_BIT:
            chunks[high_exp] -= low
            chunks[high_exp + 1] -= mid
            chunks[high_exp + 2] -= high
        else:
            chunks[high_exp] += low
            chunks[high_exp + 1] += mid
            chunks[high_exp + 2] += high
        small.adds_until_propagate -= TRANSFER_BUDGET
        self.transfers += 1

    def drain(self) -> None:
        """
        Transfer every in-use chunk into the small accumulator.

        Scans used_used, then the flag words it marks, then the set bits of
        each word. Afterwards all counts are -1 and the whole value lives in
        the small accumulator.
        """
        used_used = self.used_used
        transferred = 0

        while used_used:
            word_bit = used_used & -used_used
            used_used ^= word_bit
            w = word_bit.bit_length() - 1

            word = self.chunks_used[w]
            while word:
                bit = word & -word
                word ^= bit
                ix = (w << 6) | (bit.bit_length() - 1)
                self.transfer_chunk(ix)
                self.counts[ix] = -1
                transferred += 1
            self.chunks_used[w] = 0

        self.used_used = 0
        if transferred:
            logger.debug(f"Drained {transferred} large chunks into the small accumulator")

    def to_small(self) -> SmallAccumulator:
        """Drain and return the embedded small accumulator."""
        self.drain()
        return self.small

    def merge_into(self, target: SmallAccumulator) -> None:
        """Drain, then add this accumulator's exact value into target."""
        target.merge(self.to_small())

    def round(self) -> float:
        """Return the exact sum rounded to nearest, ties to even."""
        self.drain()
        return self.small.round()

    def mean(self, n: int) -> float:
        """
        Return the exact sum divided by n, correctly rounded.

        Raises:
            ValueError: If n is not positive
        """
        if n < 1:
            raise ValueError(f"Mean requires a positive count, got {n}")
        self.drain()
        return self.small.mean(n)
