"""Shared kernel, validation, and tolerance plumbing for the transform modules."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "cas",
    "require_pow2",
    "as_signal",
    "spectra_close",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "TransformError",
    "NotPowerOfTwoError",
    "LengthMismatchError",
    "OddLengthError",
    "PlanSizeMismatchError",
]


class TransformError(ValueError):
    """Base class for precondition violations raised by this package."""


class NotPowerOfTwoError(TransformError):
    """A fast path was asked to run on a length that is not 2**m."""

    def __init__(self, n):
        self.n = n
        super().__init__(f"length {n} is not a power of two")


class LengthMismatchError(TransformError):
    """Two vectors that must have equal lengths do not."""


class OddLengthError(TransformError):
    """The half-wave split needs an even number of samples."""


class PlanSizeMismatchError(TransformError):
    """A precomputed plan was applied to a signal of a different length."""


def cas(x):
    """cos(x) + sin(x), the real symmetric Hartley kernel.

    Accepts scalars or arrays (radians); range is [-sqrt(2), sqrt(2)].
    Non-finite input propagates through untouched, per IEEE semantics.
    """
    return np.cos(x) + np.sin(x)


def require_pow2(n: int) -> tuple[int, int]:
    """Validate that ``n`` is a power of two and return ``(n, log2(n))``.

    Raises NotPowerOfTwoError otherwise, so callers can fall back to a
    naive any-length path.
    """
    n = int(n)
    if n < 1 or (n & (n - 1)) != 0:
        raise NotPowerOfTwoError(n)
    return n, n.bit_length() - 1


def as_signal(v) -> np.ndarray:
    """Coerce to a 1-D float64 sample vector with at least one sample."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise TransformError(f"expected a 1-D sample vector, got shape {arr.shape}")
    if arr.size < 1:
        raise TransformError("signal must contain at least one sample")
    return arr


@dataclass(frozen=True)
class Tolerance:
    """Relative max-norm bound with an absolute floor for near-zero references."""

    rel_linf: float = 1e-10
    abs_floor: float = 1e-300

    def __post_init__(self):
        if not self.rel_linf > 0:
            raise ValueError("rel_linf must be positive")
        if self.abs_floor < 0:
            raise ValueError("abs_floor must be non-negative")


DEFAULT_TOLERANCE = Tolerance()


def max_abs_diff(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise LengthMismatchError(f"shape {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def rel_linf_error(a, b, abs_floor: float = 1e-300) -> float:
    """max|a-b| scaled by max(max|b|, abs_floor); ``b`` is the reference."""
    scale = max(float(np.max(np.abs(np.asarray(b)))), abs_floor)
    return max_abs_diff(a, b) / scale


def spectra_close(a, b, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff max|a_k - b_k| <= rel_linf * max(max|b_k|, abs_floor).

    ``b`` plays the role of the reference spectrum. Works for real or
    complex vectors of equal length; unequal lengths raise
    LengthMismatchError.
    """
    scale = max(float(np.max(np.abs(np.asarray(b)))), tol.abs_floor)
    return max_abs_diff(a, b) <= tol.rel_linf * scale
