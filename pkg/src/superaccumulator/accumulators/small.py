"""Small superaccumulator: 67 overlapping signed 64-bit chunks.

Chunk i has weight 2^(32*i - 1075). Neighbouring chunks overlap by 32
bits, so carries can be deferred for up to 2047 additions and are then
normalized by carry propagation.
"""

from array import array
from typing import Iterable

import numpy as np

from ..fpbits import (
    EXP_MASK,
    IMPLICIT_BIT,
    INF_BITS,
    MANTISSA_BITS,
    MANTISSA_MASK,
    QUIET_NAN_BITS,
    SIGN_BIT,
    bits_of,
    from_bits,
    to_bits,
)

SCHUNKS = 67
LOW_EXP_BITS = 5
LOW_EXP_MASK = (1 << LOW_EXP_BITS) - 1
LOW_MANTISSA_BITS = 32
LOW_MANTISSA_MASK = (1 << LOW_MANTISSA_BITS) - 1
SMALL_CARRY_TERMS = (1 << 11) - 1

# Weight exponent of chunk 0
CHUNK_UNIT_EXP = -1075
# Smallest exponent of a mantissa unit (denormal spacing)
MIN_UNIT_EXP = -1074


def _compose(negative: bool, unit_exp: int, q: int) -> float:
    """
    Build the float q * 2^unit_exp from an already rounded q.

    q carries its implicit bit, so adding it to the exponent field lets a
    rounded-up 2^53 or a denormal that reached 2^52 bump the exponent.
    """
    bits = ((unit_exp - MIN_UNIT_EXP) << MANTISSA_BITS) + q
    if bits >= INF_BITS:
        bits = INF_BITS
    if negative:
        bits |= SIGN_BIT
    return from_bits(bits)


def _round_quotient(num: int, den: int, unit_exp: int) -> float:
    """
    Round num / den * 2^unit_exp to the nearest float, ties to even.

    Uses integer division only: the quotient gives the 53 mantissa bits and
    twice the remainder against the divisor decides the rounding.
    """
    if num == 0:
        return 0.0
    negative = num < 0
    mag = -num if negative else num

    lead = mag.bit_length() - den.bit_length() + unit_exp
    ue = max(lead - 53, MIN_UNIT_EXP)
    while True:
        shift = ue - unit_exp
        if shift >= 0:
            divisor = den << shift
            q, rem = divmod(mag, divisor)
        else:
            divisor = den
            q, rem = divmod(mag << -shift, den)
        if q < (1 << 53):
            break
        ue += 1

    twice = rem << 1
    if twice > divisor or (twice == divisor and q & 1):
        q += 1
    return _compose(negative, ue, q)


class SmallAccumulator:
    """Exact accumulator made of 67 overlapping signed 64-bit chunks."""

    def __init__(self):
        # Typed signed 64-bit storage: a wraparound would raise OverflowError
        self.chunks = array("q", [0]) * SCHUNKS
        self.inf_bits = 0
        self.nan_bits = 0
        self.adds_until_propagate = SMALL_CARRY_TERMS
        self.propagations = 0

    def copy(self) -> "SmallAccumulator":
        """Return an independent accumulator with the same state."""
        dup = SmallAccumulator()
        dup.chunks = array("q", self.chunks)
        dup.inf_bits = self.inf_bits
        dup.nan_bits = self.nan_bits
        dup.adds_until_propagate = self.adds_until_propagate
        return dup

    def to_small(self) -> "SmallAccumulator":
        return self

    def fixed_point(self) -> int:
        """Return the represented finite value as an integer multiple of 2^-1075."""
        total = 0
        for c in reversed(self.chunks):
            total = (total << LOW_MANTISSA_BITS) + c
        return total

    def add(self, value: float) -> None:
        """
        Add one value, propagating carries first if the budget is spent.

        Args:
            value: Any 64-bit float, including zeros, infinities and NaNs
        """
        if self.adds_until_propagate <= 0:
            self.carry_propagate()
        self.add_bits(to_bits(value))

    def add_bits(self, ivalue: int) -> None:
        """
        Add the float whose bit pattern is ivalue.

        The caller must ensure adds_until_propagate >= 1.
        """
        mantissa = ivalue & MANTISSA_MASK
        exp = (ivalue >> MANTISSA_BITS) & EXP_MASK

        if exp and exp != EXP_MASK:
            mantissa |= IMPLICIT_BIT
        elif not exp:
            if not mantissa:
                return
            exp = 1
        else:
            self.add_inf_nan(ivalue)
            return

        low_exp = exp & LOW_EXP_MASK
        high_exp = exp >> LOW_EXP_BITS
        low_mantissa = (mantissa << low_exp) & LOW_MANTISSA_MASK
        high_mantissa = mantissa >> (LOW_MANTISSA_BITS - low_exp)

        chunks = self.chunks
        if ivalue >> 63:
            chunks[high_exp] -= low_mantissa
            chunks[high_exp + 1] -= high_mantissa
        else:
            chunks[high_exp] += low_mantissa
            chunks[high_exp + 1] += high_mantissa
        self.adds_until_propagate -= 1

    def add_array(self, values: Iterable[float] | np.ndarray) -> None:
        """
        Add every element of values, in order.

        The outer loop propagates carries whenever the budget runs out; the
        inner loop adds up to a full budget of terms with no check. Each
        block debits the budget by its length, zeros included.

        Args:
            values: Floats to add
        """
        terms = bits_of(values)
        n = len(terms)
        chunks = self.chunks
        i = 0

        while i < n:
            if self.adds_until_propagate <= 0:
                self.carry_propagate()
            m = min(n - i, self.adds_until_propagate)

            for ivalue in terms[i : i + m]:
                mantissa = ivalue & MANTISSA_MASK
                exp = (ivalue >> MANTISSA_BITS) & EXP_MASK
                if exp and exp != EXP_MASK:
                    mantissa |= IMPLICIT_BIT
                elif not exp:
                    if not mantissa:
                        continue
                    exp = 1
                else:
                    self.add_inf_nan(ivalue)
                    continue

                low_exp = exp & LOW_EXP_MASK
                high_exp = exp >> LOW_EXP_BITS
                low_mantissa = (mantissa << low_exp) & LOW_MANTISSA_MASK
                high_mantissa = mantissa >> (LOW_MANTISSA_BITS - low_exp)
                if ivalue >> 63:
                    chunks[high_exp] -= low_mantissa
                    chunks[high_exp + 1] -= high_mantissa
                else:
                    chunks[high_exp] += low_mantissa
                    chunks[high_exp + 1] += high_mantissa

            self.adds_until_propagate -= m
            i += m

    def add_inf_nan(self, bits: int) -> None:
        """
        Record an infinity or NaN in the auxiliary fields.

        The first NaN absorbed keeps its payload. Infinities of both signs
        turn the result into a NaN.

        Args:
            bits: Bit pattern with an all-ones exponent field
        """
        if (bits >> MANTISSA_BITS) & EXP_MASK != EXP_MASK:
            raise ValueError(f"Not an infinity or NaN bit pattern: 0x{bits:016X}")

        if bits & MANTISSA_MASK:
            if not self.nan_bits:
                self.nan_bits = bits
        elif not self.inf_bits:
            self.inf_bits = bits
        elif self.inf_bits != bits and not self.nan_bits:
            self.nan_bits = QUIET_NAN_BITS

    def carry_propagate(self) -> int:
        """
        Normalize chunks so all but the top one lie in [0, 2^32).

        Each chunk's high 32 bits are cleared and added, as a signed value,
        to the next chunk, starting from chunk 0. A top chunk that would be
        -1 is cleared instead and the chunk below it gets all-ones upper
        bits, so negative sums do not ripple -1 through the high chunks.

        Returns:
            Index of the highest-order non-zero chunk, or -1 if the value is zero
        """
        chunks = self.chunks
        self.adds_until_propagate = SMALL_CARRY_TERMS
        self.propagations += 1

        u = SCHUNKS - 1
        while u >= 0 and chunks[u] == 0:
            u -= 1
        if u < 0:
            return -1

        for i in range(u):
            c = chunks[i]
            high = c >> LOW_MANTISSA_BITS
            if high:
                chunks[i] = c & LOW_MANTISSA_MASK
                chunks[i + 1] += high

        # Carry out of the top until its high half is a pure sign extension
        while u < SCHUNKS - 1:
            c = chunks[u]
            high = c >> LOW_MANTISSA_BITS
            if high == 0 or high == -1:
                break
            chunks[u] = c & LOW_MANTISSA_MASK
            chunks[u + 1] += high
            u += 1

        while u >= 0 and chunks[u] == 0:
            u -= 1
        if u < 0:
            return -1

        while u > 0 and chunks[u] == -1:
            chunks[u] = 0
            u -= 1
            chunks[u] -= 1 << LOW_MANTISSA_BITS

        return u

    def round(self) -> float:
        """
        Return the exact sum rounded to nearest, ties to even.

        NaN takes precedence over infinity. An exact zero gives +0.0. The
        rounded magnitude is read from a window over the top three chunks;
        all lower chunks only contribute a sticky bit.

        Returns:
            The correctly rounded sum
        """
        if self.nan_bits:
            return from_bits(self.nan_bits)
        if self.inf_bits:
            return from_bits(self.inf_bits)

        u = self.carry_propagate()
        if u < 0:
            return 0.0

        chunks = self.chunks
        negative = chunks[u] < 0
        lo = max(u - 2, 0)

        window = 0
        for j in range(u, lo - 1, -1):
            window = (window << LOW_MANTISSA_BITS) + chunks[j]
        # Chunks below the window are non-negative after propagation
        sticky = any(chunks[j] for j in range(lo))

        if negative:
            # -(W + L) == -(W + 1) + (1 - L) with 0 < 1 - L < 1 when L > 0
            window = -window
            if sticky:
                window -= 1

        window_exp = LOW_MANTISSA_BITS * lo + CHUNK_UNIT_EXP
        top = window.bit_length()
        unit_exp = max(window_exp + top - 1 - MANTISSA_BITS, MIN_UNIT_EXP)
        shift = unit_exp - window_exp

        q = window >> shift
        rem = window & ((1 << shift) - 1)
        half = 1 << (shift - 1)
        if rem > half or (rem == half and (sticky or q & 1)):
            q += 1
        return _compose(negative, unit_exp, q)

    def mean(self, n: int) -> float:
        """
        Return the exact sum divided by n, correctly rounded.

        Args:
            n: Positive divisor (usually the number of terms)

        Returns:
            The nearest float to sum / n, ties to even

        Raises:
            ValueError: If n is not positive
        """
        if n < 1:
            raise ValueError(f"Mean requires a positive count, got {n}")
        if self.nan_bits:
            return from_bits(self.nan_bits)
        if self.inf_bits:
            return from_bits(self.inf_bits)

        self.carry_propagate()
        return _round_quotient(self.fixed_point(), n, CHUNK_UNIT_EXP)

    def merge(self, other: "SmallAccumulator") -> None:
        """
        Add the exact value of other into this accumulator.

        other is carry-propagated (its value is unchanged) so every chunk
        added here is at most 2^32 in magnitude, which costs one unit of
        this accumulator's budget.

        Args:
            other: Accumulator to merge in
        """
        if other.nan_bits:
            self.add_inf_nan(other.nan_bits)
        if other.inf_bits:
            self.add_inf_nan(other.inf_bits)

        other.carry_propagate()
        if self.adds_until_propagate <= 0:
            self.carry_propagate()

        chunks = self.chunks
        for i, c in enumerate(other.chunks):
            if c:
                chunks[i] += c
        self.adds_until_propagate -= 1
        self.carry_propagate()
