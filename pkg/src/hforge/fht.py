"""Radix-2 fast Hartley transform built on an even/odd half-wave decomposition.

The length-N Hartley spectrum splits by output parity. Adding the two
halves of the signal gives a length-N/2 vector whose Hartley spectrum is
exactly the even-indexed lines; subtracting them gives a vector whose
*half-index* Hartley spectrum is the odd-indexed lines. One multiplicative
adjustment (``twiddle_odd``) turns that half-index transform into an
ordinary length-N/2 one, and the scheme recurses down to 2-point
sum/difference cells. No bit-reversal appears: outputs are interleaved as
they come back up.

Two equivalent drivers are provided. ``fht_recursive`` follows the
decomposition literally, one sub-block at a time. ``fht`` batches every
sub-block of a level into a 2-D array and runs whole levels at once; it
performs bit-for-bit the same scalar operations (same operand pairings,
same tables) and is the fast default. Both draw their twiddle tables from
the same ``FhtPlan`` discipline, so their outputs are identical bits.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .core import (
    LengthMismatchError,
    OddLengthError,
    PlanSizeMismatchError,
    as_signal,
    require_pow2,
)

__all__ = [
    "HalfWaveParts",
    "half_wave_split",
    "reconstruct_from_halfwaves",
    "twiddle_odd",
    "dht2",
    "FhtPlan",
    "fht",
    "fht_recursive",
    "fht_with_plan",
    "ifht",
]


class HalfWaveParts(NamedTuple):
    """First halves of the even- and odd-half-wave parts of a signal.

    ``even[i] = v[i] + v[i + N/2]`` and ``odd[i] = v[i] - v[i + N/2]``.
    The full-length parts are recovered by repeating ``even``
    periodically and ``odd`` with a sign flip; the signal itself is
    ``v = (even_part + odd_part) / 2`` (see reconstruct_from_halfwaves).
    """

    even: np.ndarray
    odd: np.ndarray


def half_wave_split(v) -> HalfWaveParts:
    """Split a signal of even length into its half-wave sum and difference."""
    v = as_signal(v)
    n = v.size
    if n % 2 != 0:
        raise OddLengthError(f"half-wave split needs an even length, got {n}")
    m = n // 2
    return HalfWaveParts(even=v[:m] + v[m:], odd=v[:m] - v[m:])


def reconstruct_from_halfwaves(parts: HalfWaveParts) -> np.ndarray:
    """Invert half_wave_split: v[i] = (e[i]+o[i])/2, v[i+N/2] = (e[i]-o[i])/2."""
    even = as_signal(parts[0])
    odd = as_signal(parts[1])
    if even.size != odd.size:
        raise LengthMismatchError(
            f"half-wave parts differ in length: {even.size} vs {odd.size}"
        )
    return np.concatenate([(even + odd) / 2.0, (even - odd) / 2.0])


def _retrograde(m: int) -> np.ndarray:
    # cyclically reversed index (m - j) mod m, the standard shift convention
    j = np.arange(m)
    return (m - j) % m


def _stage_tables(length: int) -> tuple[np.ndarray, np.ndarray]:
    # angles 2*pi*j/length in one multiply-divide from integer j, so each
    # entry carries O(eps) error instead of accumulated increments
    j = np.arange(length // 2)
    theta = (2.0 * np.pi * j) / length
    return np.cos(theta), np.sin(theta)


def twiddle_odd(odd_part, parent_n: int) -> np.ndarray:
    """Adjust the odd half-wave part so an ordinary half-length transform applies.

    The odd-indexed spectral lines of the parent are the half-index
    Hartley spectrum of ``odd_part``. Folding the half-index shift into
    the signal gives::

        w[j] = odd[j] * cos(2*pi*j/parent_n) + odd[(M-j) mod M] * sin(2*pi*j/parent_n)

    with M = parent_n/2, after which DHT_M(w)[k] equals spectral line
    2k+1 of the parent transform.
    """
    odd_part = as_signal(odd_part)
    parent_n, _ = require_pow2(parent_n)
    if parent_n < 4:
        raise LengthMismatchError("twiddle needs a parent length of at least 4")
    m = parent_n // 2
    if odd_part.size != m:
        raise LengthMismatchError(
            f"odd part has length {odd_part.size}, expected parent_n/2 = {m}"
        )
    c, s = _stage_tables(parent_n)
    return odd_part * c + odd_part[_retrograde(m)] * s


def dht2(a: float, b: float) -> tuple[float, float]:
    """The 2-point transform cell shared by the Hartley and Hadamard paths."""
    return a + b, a - b


class FhtPlan:
    """Precomputed per-stage twiddle tables for transforms of one fixed length.

    ``stages[L]`` holds ``(cos(2*pi*j/L), sin(2*pi*j/L))`` for
    j = 0..L/2-1, for every stage length L in {n, n/2, ..., 4}. Table
    lengths halve per stage. Instances are immutable after construction
    and safe to share between threads.
    """

    __slots__ = ("n", "log2n", "stages")

    def __init__(self, n: int):
        self.n, self.log2n = require_pow2(n)
        stages: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        length = self.n
        while length >= 4:
            cos_t, sin_t = _stage_tables(length)
            cos_t.setflags(write=False)
            sin_t.setflags(write=False)
            stages[length] = (cos_t, sin_t)
            length //= 2
        self.stages = stages

    def __repr__(self):
        return f"FhtPlan(n={self.n})"


def _fht_engine(v: np.ndarray, plan: FhtPlan, tally=None) -> np.ndarray:
    """Level-batched driver: all sub-blocks of a stage processed as one 2-D array.

    Block rows are ordered by branch path (even child keeps its row, odd
    child lands half an array further down), which makes the final
    spectrum a plain concatenation of the terminal 2-point cells. The
    optional ``tally`` records arithmetic per level; it never alters the
    numerical path.
    """
    n = v.size
    if n == 1:
        return v.copy()
    blocks = v.reshape(1, n)
    length = n
    while length >= 4:
        m = length // 2
        even = blocks[:, :m] + blocks[:, m:]
        odd = blocks[:, :m] - blocks[:, m:]
        cos_t, sin_t = plan.stages[length]
        twiddled = odd * cos_t + odd[:, _retrograde(m)] * sin_t
        if tally is not None:
            tally.split_level(blocks.shape[0] * length)
            tally.twiddle_level(cos_t, sin_t, blocks.shape[0])
        blocks = np.concatenate([even, twiddled], axis=0)
        length = m
    a = blocks[:, 0]
    b = blocks[:, 1]
    if tally is not None:
        tally.butterfly_level(blocks.shape[0])
    return np.concatenate([a + b, a - b])


def fht_with_plan(plan: FhtPlan, v) -> np.ndarray:
    """Transform using precomputed tables; output is bit-identical to fht(v)."""
    v = as_signal(v)
    if v.size != plan.n:
        raise PlanSizeMismatchError(
            f"plan is for length {plan.n}, signal has length {v.size}"
        )
    return _fht_engine(v, plan)


def fht(v) -> np.ndarray:
    """Fast Hartley transform of a power-of-two-length signal (unnormalized)."""
    v = as_signal(v)
    return _fht_engine(v, FhtPlan(v.size))


def fht_recursive(v, plan: FhtPlan | None = None) -> np.ndarray:
    """One-sub-block-at-a-time reference form of the same decomposition.

    Clearest mapping to the even/odd split: transform the half-wave sum,
    twiddle and transform the half-wave difference, interleave. Kept as
    the canonical statement of the algorithm; ``fht`` reproduces it
    bit-for-bit in level-batched form.
    """
    v = as_signal(v)
    if plan is None:
        plan = FhtPlan(v.size)
    elif plan.n != v.size:
        raise PlanSizeMismatchError(
            f"plan is for length {plan.n}, signal has length {v.size}"
        )
    return _fht_recurse(v, plan)


def _fht_recurse(v: np.ndarray, plan: FhtPlan) -> np.ndarray:
    n = v.size
    if n == 1:
        return v.copy()
    if n == 2:
        lo, hi = dht2(v[0], v[1])
        return np.array([lo, hi])
    m = n // 2
    even = v[:m] + v[m:]
    odd = v[:m] - v[m:]
    cos_t, sin_t = plan.stages[n]
    twiddled = odd * cos_t + odd[_retrograde(m)] * sin_t
    out = np.empty(n)
    out[0::2] = _fht_recurse(even, plan)
    out[1::2] = _fht_recurse(twiddled, plan)
    return out


def ifht(spectrum) -> np.ndarray:
    """Inverse transform: the same kernel scaled by 1/N (involution)."""
    spectrum = as_signal(spectrum)
    return fht(spectrum) / spectrum.size
