"""Multiplication-free fast Walsh-Hadamard transform in natural order.

This shares its skeleton with the fast Hartley path: the same half-wave
sum/difference split, the same 2-point cells, but no twiddle stage at
all. Equivalently, FWHT(v) = concat(FWHT(even), FWHT(odd)) where
(even, odd) = half_wave_split(v); the in-place form below runs that
recursion as log2(N) butterfly passes at strides N/2, N/4, ..., 1 and
performs bit-for-bit the same additions.
"""

from __future__ import annotations

import numpy as np

from .core import as_signal, require_pow2

__all__ = ["fwht", "fwht_inplace", "ifwht"]


def _butterfly_passes(buf: np.ndarray) -> None:
    n = buf.size
    stride = n // 2
    while stride >= 1:
        pairs = buf.reshape(-1, 2, stride)
        top = pairs[:, 0, :]
        bottom = pairs[:, 1, :]
        summed = top + bottom
        diffed = top - bottom
        pairs[:, 0, :] = summed
        pairs[:, 1, :] = diffed
        stride //= 2


def fwht(v) -> np.ndarray:
    """Hadamard spectrum in natural order; N*log2(N) additions, no products."""
    v = as_signal(v)
    require_pow2(v.size)
    out = v.copy()
    _butterfly_passes(out)
    return out


def fwht_inplace(buf: np.ndarray) -> None:
    """Overwrite ``buf`` with its Hadamard spectrum.

    ``buf`` must be a contiguous 1-D float64 array of power-of-two
    length; the caller keeps ownership and must not share it with
    concurrent readers while this runs.
    """
    if not isinstance(buf, np.ndarray) or buf.ndim != 1:
        raise TypeError("fwht_inplace needs a 1-D numpy array")
    if not buf.flags.c_contiguous:
        # reshape would silently copy and the caller's buffer would stay stale
        raise TypeError("fwht_inplace needs a contiguous buffer")
    require_pow2(buf.size)
    _butterfly_passes(buf)


def ifwht(spectrum) -> np.ndarray:
    """Inverse Hadamard transform: forward pass scaled by 1/N."""
    spectrum = as_signal(spectrum)
    return fwht(spectrum) / spectrum.size
