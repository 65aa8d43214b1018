"""Reading and writing arrays of doubles.

Binary files hold raw little-endian IEEE-754 doubles. Text files hold one
value per line: a decimal literal, a hex float, or 0x followed by exactly
16 hex digits giving the bit pattern (for NaN payloads and denormals).
Blank lines and lines starting with '#' are skipped.
"""

import math
from enum import StrEnum
from pathlib import Path
from typing import Iterable, List

import numpy as np

from .fpbits import from_bits, to_bits

BINARY_DTYPE = np.dtype("<f8")


class FileFormat(StrEnum):
    """On-disk layout of a value file."""

    BIN = "bin"
    TEXT = "text"


def parse_value(token: str) -> float:
    """
    Parse one text-format value.

    Raises:
        ValueError: If token is not a float literal or bit pattern
    """
    text = token.strip()
    lowered = text.lower()
    if lowered.startswith("0x") and len(text) == 18:
        return from_bits(int(text, 16))
    if "0x" in lowered:
        return float.fromhex(text)
    return float(text)


def format_value(v: float) -> str:
    """Render a value so parse_value returns it bit-exactly."""
    if math.isfinite(v):
        return repr(v)
    return f"0x{to_bits(v):016X}"


def read_values(path: Path, fmt: FileFormat = FileFormat.BIN) -> np.ndarray:
    """
    Read a value file.

    Raises:
        OSError: If the file cannot be read
        ValueError: If the content is malformed
    """
    if fmt == FileFormat.BIN:
        size = path.stat().st_size
        if size % BINARY_DTYPE.itemsize:
            raise ValueError(
                f"{path}: size {size} is not a multiple of {BINARY_DTYPE.itemsize} bytes"
            )
        return np.fromfile(path, dtype=BINARY_DTYPE).astype(np.float64)

    values: List[float] = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(parse_value(line))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: cannot parse value '{line}'") from None
    return np.array(values, dtype=np.float64)


def write_values(
    values: Iterable[float] | np.ndarray,
    path: Path,
    fmt: FileFormat = FileFormat.BIN,
) -> None:
    """Write values in the given format."""
    if fmt == FileFormat.BIN:
        np.asarray(values, dtype=BINARY_DTYPE).tofile(path)
        return

    with open(path, "w", encoding="utf-8") as f:
        for v in np.asarray(values, dtype=np.float64).tolist():
            f.write(format_value(v) + "\n")
