"""Wall-clock benchmark reports for the transform kinds with defined op counts.

Timings use the monotonic clock; each measurement is repeated and the
median and minimum are reported in nanoseconds. Operation counts come
from the instrumented drivers, so the report carries the exact
arithmetic claims next to the machine-dependent times. Measurements are
strictly sequential, one transform call per timed interval.
"""

from __future__ import annotations

import time

import numpy as np

from .fht import fht
from .fwht import fwht
from .opcount import CountingMode, OpCount, counted_fht, dht_naive_op_count, fwht_op_count
from .oracles import dht_naive

__all__ = ["BENCH_KINDS", "run_benchmark"]

BENCH_KINDS = ("dht-naive", "fht", "fwht")

_RUNNERS = {"dht-naive": dht_naive, "fht": fht, "fwht": fwht}


def _op_count(kind: str, signal: np.ndarray) -> OpCount:
    if kind == "dht-naive":
        return dht_naive_op_count(signal.size)
    if kind == "fwht":
        return fwht_op_count(signal.size)
    _, ops = counted_fht(signal, CountingMode.PAPER)
    return ops


def _time_once(fn, arg) -> int:
    start = time.perf_counter_ns()
    fn(arg)
    return time.perf_counter_ns() - start


def run_benchmark(
    kinds=BENCH_KINDS,
    log2_min: int = 4,
    log2_max: int = 12,
    reps: int = 5,
    seed: int = 2024,
) -> dict:
    """Benchmark each kind at N = 2^log2_min .. 2^log2_max; returns a json-ready dict."""
    kinds = list(kinds)
    for kind in kinds:
        if kind not in BENCH_KINDS:
            raise ValueError(f"unknown bench kind {kind!r}; choose from {BENCH_KINDS}")
    if not 0 <= log2_min <= log2_max:
        raise ValueError(f"bad size range 2^{log2_min}..2^{log2_max}")
    if reps < 3:
        raise ValueError("reps must be >= 3")
    records = []
    for log2n in range(log2_min, log2_max + 1):
        n = 1 << log2n
        signal = np.random.default_rng([seed, log2n]).uniform(-1.0, 1.0, n)
        for kind in kinds:
            runner = _RUNNERS[kind]
            times = sorted(_time_once(runner, signal) for _ in range(reps))
            ops = _op_count(kind, signal)
            records.append(
                {
                    "kind": kind,
                    "n": n,
                    "reps": reps,
                    "median_ns": times[len(times) // 2],
                    "min_ns": times[0],
                    "op_count": {
                        "multiplications": ops.multiplications,
                        "additions": ops.additions,
                    },
                }
            )
    return {
        "schema": "hforge-bench-v1",
        "log2_range": [log2_min, log2_max],
        "reps": reps,
        "records": records,
    }
