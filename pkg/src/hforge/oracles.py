"""Brute-force O(N^2) reference transforms.

These are the ground truth every fast path is checked against, so they
stay as close to the defining sums as possible: one kernel row per
output component, no algebraic shortcuts. They accept any length (the
Hadamard oracle excepted, which only exists for powers of two).
"""

from __future__ import annotations

import numpy as np

from .core import as_signal, cas, require_pow2

__all__ = [
    "dht_naive",
    "idht_naive",
    "dft_naive",
    "fwht_naive",
    "hadamard_matrix",
]


def dht_naive(v) -> np.ndarray:
    """Hartley spectrum by direct evaluation: V_k = sum_i v_i cas(2*pi*k*i/N)."""
    v = as_signal(v)
    n = v.size
    i = np.arange(n)
    out = np.empty(n)
    for k in range(n):
        out[k] = np.dot(v, cas(2.0 * np.pi * (k * i) / n))
    return out


def idht_naive(spectrum) -> np.ndarray:
    """Inverse of dht_naive: the same kernel, scaled by 1/N."""
    spectrum = as_signal(spectrum)
    return dht_naive(spectrum) / spectrum.size


def dft_naive(v) -> np.ndarray:
    """Fourier spectrum by direct evaluation: F_k = sum_i v_i exp(-2j*pi*k*i/N)."""
    v = as_signal(v)
    n = v.size
    i = np.arange(n)
    out = np.empty(n, dtype=np.complex128)
    for k in range(n):
        out[k] = np.dot(v, np.exp(-2j * np.pi * (k * i) / n))
    return out


def hadamard_matrix(n: int) -> np.ndarray:
    """Order-n Hadamard matrix in the doubling construction, entries +-1.

    H(1) = [1], H(2L) = [[H, H], [H, -H]]. int8 entries keep the memory
    footprint at n*n bytes, which matters once n reaches a few thousand.
    """
    n, _ = require_pow2(n)
    h = np.ones((1, 1), dtype=np.int8)
    block = np.array([[1, 1], [1, -1]], dtype=np.int8)
    while h.shape[0] < n:
        h = np.kron(block, h)
    return h


def fwht_naive(v) -> np.ndarray:
    """Hadamard spectrum as an explicit matrix-vector product, natural order."""
    v = as_signal(v)
    return hadamard_matrix(v.size) @ v
