"""Seeded property sweeps that substantiate the fast paths against the oracles.

For every size N = 2^0 .. 2^max_log2 and a batch of seeded random
signals, this checks: fast-vs-naive agreement, the involution property
of both transforms, Parseval energy preservation, the shared-skeleton
identity tying the Hadamard recursion to the Hartley split, and the
exact operation-count contracts. Results are deterministic given the
seed, so a sweep's pass/fail table is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fht import fht, half_wave_split
from .fwht import fwht
from .opcount import CountingMode, counted_fht, counted_fwht
from .oracles import dht_naive

__all__ = ["PropertyCheck", "VerificationReport", "run_verification", "PROPERTY_NAMES"]

PROPERTY_NAMES = (
    "fht-matches-naive",
    "fht-involution",
    "fwht-involution",
    "fht-parseval",
    "fwht-parseval",
    "fwht-skeleton",
    "fht-opcount",
    "fwht-opcount",
)

_ABS_FLOOR = 1e-300


@dataclass(frozen=True)
class PropertyCheck:
    n: int
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    max_log2: int
    trials: int
    seed: int
    rel_tol: float
    checks: list[PropertyCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[PropertyCheck]:
        return [c for c in self.checks if not c.passed]


def _rel_err(actual, reference) -> float:
    reference = np.asarray(reference)
    scale = max(float(np.max(np.abs(reference))), _ABS_FLOOR)
    return float(np.max(np.abs(np.asarray(actual) - reference))) / scale


def _signal(seed: int, log2n: int, trial: int) -> np.ndarray:
    rng = np.random.default_rng([seed, log2n, trial])
    return rng.uniform(-1.0, 1.0, 1 << log2n)


def run_verification(
    max_log2: int = 12,
    trials: int = 20,
    seed: int = 1234,
    rel_tol: float = 1e-10,
) -> VerificationReport:
    """Run every property suite for N = 1 .. 2^max_log2; see module docstring."""
    if max_log2 < 0:
        raise ValueError("max_log2 must be >= 0")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if rel_tol < 0:
        raise ValueError("tolerance must be >= 0")
    report = VerificationReport(max_log2, trials, seed, rel_tol)
    for log2n in range(max_log2 + 1):
        n = 1 << log2n
        signals = [_signal(seed, log2n, t) for t in range(trials)]
        fast = [fht(v) for v in signals]
        walsh = [fwht(v) for v in signals]

        def check(name, failer):
            # failer returns None on success, else (trial, detail)
            failure = failer()
            if failure is None:
                report.checks.append(PropertyCheck(n, name, True))
            else:
                trial, detail = failure
                report.checks.append(
                    PropertyCheck(n, name, False, f"trial={trial} {detail}")
                )

        def worst(err_fn):
            for t, v in enumerate(signals):
                err = err_fn(t, v)
                if not err <= rel_tol:
                    return t, f"rel err {err:.3e} > {rel_tol:.3e}"
            return None

        check("fht-matches-naive", lambda: worst(lambda t, v: _rel_err(fast[t], dht_naive(v))))
        check("fht-involution", lambda: worst(lambda t, v: _rel_err(fht(fast[t]), n * v)))
        check("fwht-involution", lambda: worst(lambda t, v: _rel_err(fwht(walsh[t]), n * v)))
        check(
            "fht-parseval",
            lambda: worst(
                lambda t, v: _rel_err(np.sum(fast[t] ** 2), n * np.sum(v**2))
            ),
        )
        check(
            "fwht-parseval",
            lambda: worst(
                lambda t, v: _rel_err(np.sum(walsh[t] ** 2), n * np.sum(v**2))
            ),
        )

        if n >= 2:

            def skeleton():
                for t, v in enumerate(signals):
                    even, odd = half_wave_split(v)
                    stitched = np.concatenate([fwht(even), fwht(odd)])
                    if not np.array_equal(stitched, walsh[t]):
                        return t, "skeleton concatenation differs from direct transform"
                return None

            check("fwht-skeleton", skeleton)

        def fht_opcount():
            v = signals[0]
            spectrum, paper = counted_fht(v, CountingMode.PAPER)
            _, optimized = counted_fht(v, CountingMode.OPTIMIZED)
            expected = n * (log2n - 1) if n >= 2 else 0
            bound = 2 * n * log2n
            if paper.multiplications != expected:
                return 0, f"paper mults {paper.multiplications} != {expected}"
            if paper.multiplications > bound:
                return 0, f"paper mults {paper.multiplications} above bound {bound}"
            if optimized.multiplications > paper.multiplications:
                return 0, "optimized mults exceed the full-product model"
            if not np.array_equal(spectrum, fast[0]):
                return 0, "counted spectrum deviates from plain transform"
            return None

        check("fht-opcount", fht_opcount)

        def fwht_opcount():
            spectrum, ops = counted_fwht(signals[0])
            if ops.multiplications != 0:
                return 0, f"expected zero multiplications, got {ops.multiplications}"
            if ops.additions != n * log2n:
                return 0, f"additions {ops.additions} != {n * log2n}"
            if not np.array_equal(spectrum, walsh[0]):
                return 0, "counted spectrum deviates from plain transform"
            return None

        check("fwht-opcount", fwht_opcount)
    return report
