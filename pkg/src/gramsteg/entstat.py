"""Byte-level randomness battery with the six metrics of the ENT tool.

All functions take a bytes-like object and look at it one byte at a time.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import EmptyInput, InsufficientData, InvalidArgument

MONTE_CARLO_BYTES = 6
_COORD_MAX = (1 << 24) - 1


def _as_array(data) -> np.ndarray:
    return np.frombuffer(bytes(data), dtype=np.uint8)


def _counts(data) -> tuple[np.ndarray, int]:
    a = _as_array(data)
    if a.size == 0:
        raise EmptyInput("no data")
    return np.bincount(a, minlength=256), a.size


def entropy(data) -> float:
    """Shannon entropy in bits per byte."""
    counts, n = _counts(data)
    f = counts[counts > 0] / n
    return float(max(0.0, -(f * np.log2(f)).sum()))


def optimum_compression_pct(entropy_bits: float) -> int:
    """Size reduction an ideal coder could reach, truncated to a whole percent."""
    if not 0 <= entropy_bits <= 8:
        raise InvalidArgument(f"entropy {entropy_bits} outside [0, 8]")
    return int(100 * (8 - entropy_bits) / 8)


def chi_square(data) -> float:
    counts, n = _counts(data)
    expected = n / 256
    return float(((counts - expected) ** 2 / expected).sum())


def arithmetic_mean(data) -> float:
    a = _as_array(data)
    if a.size == 0:
        raise EmptyInput("no data")
    return float(a.sum(dtype=np.int64) / a.size)


def monte_carlo_pi(data) -> tuple[float, float]:
    """Estimate pi from 6-byte groups read as two 24-bit big-endian coordinates.

    Returns ``(estimate, error_pct)``.  A trailing partial group is ignored.
    """
    a = _as_array(data)
    groups = a.size // MONTE_CARLO_BYTES
    if groups == 0:
        raise InsufficientData(f"need at least {MONTE_CARLO_BYTES} bytes")
    g = a[: groups * MONTE_CARLO_BYTES].reshape(groups, 6).astype(np.int64)
    x = (g[:, 0] << 16) | (g[:, 1] << 8) | g[:, 2]
    y = (g[:, 3] << 16) | (g[:, 4] << 8) | g[:, 5]
    inside = int(np.count_nonzero(x * x + y * y <= _COORD_MAX * _COORD_MAX))
    estimate = 4.0 * inside / groups
    return estimate, 100.0 * abs(estimate - math.pi) / math.pi


def serial_correlation(data) -> float | None:
    """Lag-1 correlation with the last byte paired to the first.

    ``None`` when every byte is equal (the coefficient is undefined).
    """
    a = _as_array(data).astype(np.int64)
    n = a.size
    if n < 2:
        raise InsufficientData("need at least 2 bytes")
    s = int(a.sum())
    s2 = int((a * a).sum())
    cross = int((a * np.roll(a, -1)).sum())
    denom = n * s2 - s * s
    if denom == 0:
        return None
    return (n * cross - s * s) / denom


@dataclass(frozen=True)
class StatReport:
    entropy_bits_per_byte: float
    optimum_compression_pct: int
    chi_square: float
    arithmetic_mean: float
    monte_carlo_pi: float
    monte_carlo_error_pct: float
    serial_correlation: float | None
    byte_count: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    def to_table(self) -> str:
        scc = "undefined" if self.serial_correlation is None else f"{self.serial_correlation:.6f}"
        rows = [
            ("Entropy", f"{self.entropy_bits_per_byte:.6f} bits/byte"),
            ("Optimum Compression", f"{self.optimum_compression_pct}%"),
            ("Chi Square Distribution", f"{self.chi_square:.2f}"),
            ("Arithmetic Mean", f"{self.arithmetic_mean:.4f}"),
            (
                "Monte Carlo Value For Pi",
                f"{self.monte_carlo_pi:.5f} (error {self.monte_carlo_error_pct:.2f}%)",
            ),
            ("Serial Correlation Coefficient", scc),
            ("Bytes", str(self.byte_count)),
        ]
        width = max(len(name) for name, _ in rows)
        return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)


def analyze(data) -> StatReport:
    data = bytes(data)
    if len(data) < MONTE_CARLO_BYTES:
        raise InsufficientData(f"need at least {MONTE_CARLO_BYTES} bytes, got {len(data)}")
    h = entropy(data)
    pi, err = monte_carlo_pi(data)
    return StatReport(
        entropy_bits_per_byte=h,
        optimum_compression_pct=optimum_compression_pct(h),
        chi_square=chi_square(data),
        arithmetic_mean=arithmetic_mean(data),
        monte_carlo_pi=pi,
        monte_carlo_error_pct=err,
        serial_correlation=serial_correlation(data),
        byte_count=len(data),
    )
