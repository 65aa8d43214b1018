"""Bit-level decomposition and classification of IEEE-754 64-bit floats.

Reinterpretation is a value-level bit cast (pack and unpack with the same
byte order), so the result does not depend on the host's endianness.
"""

import struct
from dataclasses import dataclass
from enum import StrEnum
from typing import Iterable, List

import numpy as np

MANTISSA_BITS = 52
EXP_BITS = 11
EXP_BIAS = 1023
EXP_MASK = (1 << EXP_BITS) - 1
MANTISSA_MASK = (1 << MANTISSA_BITS) - 1
IMPLICIT_BIT = 1 << MANTISSA_BITS
SIGN_BIT = 1 << 63
MASK64 = (1 << 64) - 1

INF_BITS = EXP_MASK << MANTISSA_BITS
QUIET_NAN_BITS = INF_BITS | (1 << (MANTISSA_BITS - 1))

_DOUBLE = struct.Struct("<d")
_WORD = struct.Struct("<Q")


class FpClass(StrEnum):
    """Class of a 64-bit floating-point value."""

    ZERO = "zero"
    DENORMAL = "denormal"
    NORMAL = "normal"
    INFINITY = "infinity"
    NAN = "nan"


@dataclass(frozen=True)
class FpParts:
    """Sign, exponent and mantissa fields of a 64-bit float."""

    sign: int
    exponent_field: int
    mantissa_field: int
    fp_class: FpClass

    def to_bits(self) -> int:
        """Reassemble the fields into the 64-bit pattern."""
        return (
            (self.sign << 63)
            | (self.exponent_field << MANTISSA_BITS)
            | self.mantissa_field
        )

    def value(self) -> float:
        """Reconstruct the value from the fields."""
        return from_bits(self.to_bits())


def to_bits(v: float) -> int:
    """Return the IEEE-754 bit pattern of v as an unsigned 64-bit int."""
    return _WORD.unpack(_DOUBLE.pack(v))[0]


def from_bits(bits: int) -> float:
    """Return the float whose IEEE-754 bit pattern is bits."""
    return _DOUBLE.unpack(_WORD.pack(bits & MASK64))[0]


def classify(exponent_field: int, mantissa_field: int) -> FpClass:
    """Classify a value from its exponent and mantissa fields."""
    if exponent_field == EXP_MASK:
        return FpClass.NAN if mantissa_field else FpClass.INFINITY
    if exponent_field == 0:
        return FpClass.DENORMAL if mantissa_field else FpClass.ZERO
    return FpClass.NORMAL


def decompose(v: float) -> FpParts:
    """
    Split v into its sign, exponent and mantissa fields.

    Every bit pattern is accepted; NaN payloads are kept verbatim.

    Args:
        v: Value to decompose

    Returns:
        FpParts whose to_bits() reproduces v's bit pattern
    """
    bits = to_bits(v)
    exponent_field = (bits >> MANTISSA_BITS) & EXP_MASK
    mantissa_field = bits & MANTISSA_MASK
    return FpParts(
        sign=bits >> 63,
        exponent_field=exponent_field,
        mantissa_field=mantissa_field,
        fp_class=classify(exponent_field, mantissa_field),
    )


def bits_of(values: Iterable[float] | np.ndarray) -> List[int]:
    """
    Reinterpret a sequence of floats as a list of 64-bit patterns.

    Done in bulk through a numpy view, which is the array-level form of
    to_bits().
    """
    if isinstance(values, (np.ndarray, list, tuple)):
        arr = np.ascontiguousarray(values, dtype=np.float64)
    else:
        arr = np.fromiter(values, dtype=np.float64)
    return arr.view(np.uint64).tolist()


def nan_payload(v: float) -> int:
    """Return the mantissa field (payload) of a NaN."""
    return to_bits(v) & MANTISSA_MASK


def format_result(v: float) -> str:
    """Render a result as its decimal value and 16-hex-digit bit pattern."""
    bits = to_bits(v)
    if v != v:
        return f"nan(0x{bits & MANTISSA_MASK:x}) 0x{bits:016X}"
    return f"{v!r} 0x{bits:016X}"
