"""Exact conversions between Hartley and Fourier spectra of real signals.

For a real signal the two spectra carry the same information:

    H_k = Re(F_k) - Im(F_k)
    F_k = (H_k + H_{N-k})/2 - j*(H_k - H_{N-k})/2

with the index N-k taken modulo N (so H_N means H_0). Chaining the
second formula after a fast Hartley transform yields a real-input DFT.
``hartley_from_fourier`` is exact only for spectra of real signals; the
formula is total either way and no check is imposed on the caller.
"""

from __future__ import annotations

import numpy as np

from .core import as_signal
from .fht import fht

__all__ = ["hartley_from_fourier", "fourier_from_hartley", "dft_via_fht"]


def hartley_from_fourier(fourier) -> np.ndarray:
    """H_k = Re(F_k) - Im(F_k), componentwise."""
    fourier = np.asarray(fourier, dtype=np.complex128)
    if fourier.ndim != 1 or fourier.size < 1:
        raise ValueError("expected a non-empty 1-D complex spectrum")
    return fourier.real - fourier.imag


def _reflected(h: np.ndarray) -> np.ndarray:
    n = h.size
    return h[(n - np.arange(n)) % n]


def fourier_from_hartley(hartley) -> np.ndarray:
    """F_k = (H_k + H_{N-k})/2 - j*(H_k - H_{N-k})/2, indices modulo N."""
    h = as_signal(hartley)
    hr = _reflected(h)
    return (h + hr) / 2.0 - 1j * (h - hr) / 2.0


def dft_via_fht(v) -> np.ndarray:
    """Fourier spectrum of a real power-of-two-length signal via the fast Hartley path."""
    return fourier_from_hartley(fht(v))
