"""Command-line surface: transform files, verification sweeps, benchmarks, op counts.

Exit codes: 0 success, 1 verification property failure, 2 usage / I-O /
parse problems, 3 unexpected internal failure. Diagnostics go to stderr;
reports go to files or stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bench import BENCH_KINDS, run_benchmark
from .core import NotPowerOfTwoError, TransformError, require_pow2
from .dft_bridge import dft_via_fht
from .fht import FhtPlan, fht, fht_with_plan, ifht
from .fwht import fwht, ifwht
from .opcount import CountingMode, counted_fht, counted_fwht
from .oracles import dft_naive, dht_naive, idht_naive
from .signal_io import FORMATS, SignalFileError, read_signal, write_spectrum
from .verify import run_verification

__all__ = ["main"]

TRANSFORM_KINDS = ("dht-naive", "fht", "fwht", "dft", "idht", "ifwht")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _warn(msg: str) -> None:
    print(f"hforge: warning: {msg}", file=sys.stderr)


def _fail_usage(msg: str) -> int:
    print(f"hforge: error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _cmd_transform(args) -> int:
    try:
        signal = read_signal(args.in_path, args.format)
    except (SignalFileError, OSError) as exc:
        return _fail_usage(str(exc))
    n = signal.size
    kind = args.kind
    fast = _is_pow2(n)

    if kind in ("fwht", "ifwht") and not fast:
        return _fail_usage(
            f"--kind {kind} needs a power-of-two length and no direct fallback "
            f"exists for length {n} (Hadamard transforms are only defined for 2**m)"
        )
    if not fast and kind in ("fht", "dft", "idht"):
        if args.strict:
            return _fail_usage(
                f"--kind {kind} needs a power-of-two length, got {n} (strict mode)"
            )
        _warn(f"length {n} is not a power of two; using the direct O(N^2) path")

    if kind == "dht-naive":
        out = dht_naive(signal)
    elif kind == "fht":
        if not fast:
            out = dht_naive(signal)
        elif args.plan_reuse:
            out = fht_with_plan(FhtPlan(n), signal)
        else:
            out = fht(signal)
    elif kind == "idht":
        out = ifht(signal) if fast else idht_naive(signal)
    elif kind == "dft":
        out = dft_via_fht(signal) if fast else dft_naive(signal)
    elif kind == "fwht":
        out = fwht(signal)
    else:
        out = ifwht(signal)

    try:
        write_spectrum(args.out_path, out, args.format)
    except (SignalFileError, OSError, ValueError) as exc:
        return _fail_usage(str(exc))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verification(
        max_log2=args.max_log2, trials=args.trials, seed=args.seed, rel_tol=args.tol
    )
    print(f"{'n':>8}  {'property':<20}  result")
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{check.n:>8}  {check.name:<20}  {status}")
    failures = report.failures()
    if failures:
        for check in failures:
            print(
                f"FAIL n={check.n} seed={report.seed} property={check.name} "
                f"{check.detail}",
                file=sys.stderr,
            )
        print(
            f"{len(failures)} of {len(report.checks)} checks failed", file=sys.stderr
        )
        return EXIT_VERIFY_FAILED
    print(f"all {len(report.checks)} checks passed")
    return EXIT_OK


def _parse_log2_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"expected A..B, got {text!r}")
    return int(lo), int(hi)


def _cmd_bench(args) -> int:
    try:
        lo, hi = _parse_log2_range(args.log2_range)
    except ValueError as exc:
        return _fail_usage(str(exc))
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    try:
        report = run_benchmark(kinds=kinds, log2_min=lo, log2_max=hi, reps=args.reps)
    except ValueError as exc:
        return _fail_usage(str(exc))
    payload = json.dumps(report, indent=2)
    if args.out_path:
        try:
            with open(args.out_path, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        except OSError as exc:
            return _fail_usage(str(exc))
    else:
        print(payload)
    return EXIT_OK


def _cmd_opcount(args) -> int:
    try:
        n, log2n = require_pow2(args.size)
    except NotPowerOfTwoError as exc:
        return _fail_usage(str(exc))
    mode = CountingMode(args.mode)
    probe = np.zeros(n)
    _, hartley = counted_fht(probe, mode)
    _, walsh = counted_fwht(probe)
    bound = 2 * n * log2n
    print(f"{'n':>10}  {'transform':<10}  {'mode':<9}  {'mults':>12}  {'adds':>12}  "
          f"{'bound 2*n*log2(n)':>18}  within")
    for label, ops in (("fht", hartley), ("fwht", walsh)):
        ok = "yes" if ops.multiplications <= bound else "no"
        print(
            f"{n:>10}  {label:<10}  {mode.value:<9}  {ops.multiplications:>12}  "
            f"{ops.additions:>12}  {bound:>18}  {ok}"
        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hforge",
        description="Fast Hartley / Walsh-Hadamard transforms with oracle "
        "verification and exact operation counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transform", help="transform a signal file")
    p_tr.add_argument("--kind", required=True, choices=TRANSFORM_KINDS)
    p_tr.add_argument("--in", dest="in_path", required=True, metavar="PATH")
    p_tr.add_argument("--out", dest="out_path", required=True, metavar="PATH")
    p_tr.add_argument(
        "--format",
        choices=FORMATS,
        help="file format for both input and output (default: infer from suffix)",
    )
    p_tr.add_argument(
        "--plan-reuse",
        action="store_true",
        help="route power-of-two transforms through a precomputed twiddle plan",
    )
    p_tr.add_argument(
        "--strict",
        action="store_true",
        help="error out instead of falling back to the O(N^2) path on "
        "non-power-of-two input",
    )
    p_tr.set_defaults(run=_cmd_transform)

    p_ver = sub.add_parser("verify", help="run the seeded property sweeps")
    p_ver.add_argument("--max-log2", type=int, default=12, metavar="M")
    p_ver.add_argument("--trials", type=int, default=20, metavar="T")
    p_ver.add_argument("--seed", type=int, default=1234, metavar="S")
    p_ver.add_argument("--tol", type=float, default=1e-10, metavar="R")
    p_ver.set_defaults(run=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time transforms and report op counts")
    p_bench.add_argument("--kinds", default=",".join(BENCH_KINDS), metavar="LIST")
    p_bench.add_argument("--log2-range", default="4..12", metavar="A..B")
    p_bench.add_argument("--reps", type=int, default=5, metavar="R")
    p_bench.add_argument("--out", dest="out_path", metavar="PATH")
    p_bench.set_defaults(run=_cmd_bench)

    p_ops = sub.add_parser("opcount", help="print operation-count table for one size")
    p_ops.add_argument("--size", type=int, required=True, metavar="N")
    p_ops.add_argument("--mode", choices=["paper", "optimized"], default="paper")
    p_ops.set_defaults(run=_cmd_opcount)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (TransformError, SignalFileError, OSError, ValueError) as exc:
        return _fail_usage(str(exc))
    except Exception as exc:  # anything else is a bug, not a usage problem
        print(f"hforge: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
