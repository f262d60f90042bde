"""Exact tallies of the real arithmetic performed by each transform.

Counts are carried in return values, never in shared state, so
concurrent counted runs cannot interfere, and the counted drivers run
the exact same numerical code as the uncounted ones: the spectrum they
return is bit-for-bit identical.

Two counting models are provided for the Hartley path. PAPER is the
on-paper count: every twiddle product is charged, even those whose
table factor is 0 or +-1. OPTIMIZED models an implementation that skips
trivial products: a factor of exactly +-1 costs no multiplication, and
a factor of exactly 0 removes both the product and the addition of the
vanished term. Subtractions count as additions in both models.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import as_signal, require_pow2
from .fht import FhtPlan, _fht_engine
from .fwht import fwht
from .oracles import dht_naive

__all__ = [
    "OpCount",
    "CountingMode",
    "counted_fht",
    "counted_fwht",
    "counted_dht_naive",
    "dht_naive_op_count",
    "fwht_op_count",
]


@dataclass(frozen=True)
class OpCount:
    multiplications: int
    additions: int

    def __post_init__(self):
        if self.multiplications < 0 or self.additions < 0:
            raise ValueError("operation counts cannot be negative")


class CountingMode(Enum):
    PAPER = "paper"
    OPTIMIZED = "optimized"


class _Tally:
    """Level hooks called by the transform engine; sums scalar op counts."""

    def __init__(self, mode: CountingMode):
        self.mode = mode
        self.mults = 0
        self.adds = 0

    def split_level(self, n_elems: int) -> None:
        # one add and one subtract per sample pair across the level
        self.adds += n_elems

    def twiddle_level(self, cos_t: np.ndarray, sin_t: np.ndarray, blocks: int) -> None:
        m = cos_t.size
        if self.mode is CountingMode.PAPER:
            self.mults += 2 * m * blocks
            self.adds += m * blocks
            return
        cos_trivial = (cos_t == 0.0) | (np.abs(cos_t) == 1.0)
        sin_trivial = (sin_t == 0.0) | (np.abs(sin_t) == 1.0)
        per_block_mults = int(np.count_nonzero(~cos_trivial)) + int(
            np.count_nonzero(~sin_trivial)
        )
        # the sum w[j] survives only when neither term vanished outright
        per_block_adds = int(np.count_nonzero((cos_t != 0.0) & (sin_t != 0.0)))
        self.mults += per_block_mults * blocks
        self.adds += per_block_adds * blocks

    def butterfly_level(self, cells: int) -> None:
        self.adds += 2 * cells

    def result(self) -> OpCount:
        return OpCount(self.mults, self.adds)


def counted_fht(v, mode: CountingMode = CountingMode.PAPER) -> tuple[np.ndarray, OpCount]:
    """Fast Hartley transform plus its operation tally.

    In PAPER mode the multiplication count is N*(log2(N)-1) for N >= 2,
    which sits under the 2*N*log2(N) envelope of a textbook radix-2 FFT.
    """
    v = as_signal(v)
    tally = _Tally(mode)
    spectrum = _fht_engine(v, FhtPlan(v.size), tally=tally)
    return spectrum, tally.result()


def fwht_op_count(n: int) -> OpCount:
    """Cost of the Hadamard butterfly passes: zero products, N*log2(N) additions."""
    n, log2n = require_pow2(n)
    # each of the log2(N) passes performs exactly N additions
    return OpCount(0, n * log2n)


def counted_fwht(v) -> tuple[np.ndarray, OpCount]:
    """Hadamard transform plus its tally; the count depends only on the length."""
    v = as_signal(v)
    return fwht(v), fwht_op_count(v.size)


def dht_naive_op_count(n: int) -> OpCount:
    """Cost of direct evaluation: each of the N components takes N kernel
    products and N-1 accumulation additions, independent of sample values."""
    n = int(n)
    if n < 1:
        raise ValueError("length must be >= 1")
    return OpCount(n * n, n * (n - 1))


def counted_dht_naive(v) -> tuple[np.ndarray, OpCount]:
    """Direct-evaluation Hartley transform plus its tally."""
    v = as_signal(v)
    return dht_naive(v), dht_naive_op_count(v.size)
