"""Command-line front end: exact Frobenius numbers, bounds, Dedekind sums,
partition counts, and the random-triple experiment pipeline.

Exit codes: 0 on success, 2 for usage/validation errors, 1 for internal
invariant failures (uncaught exceptions).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from fractions import Fraction

from .bounds import (
    bound_bdr_sqrt,
    bound_davison_lower,
    bound_erdos_graham,
    bound_known_combined,
    bound_selmer,
    bound_vitek,
    frobenius_upper_new,
    sigma_lower_algorithm,
)
from .dedekind import sigma_naive, sigma_via_rademacher
from .experiments import (
    ExperimentConfig,
    read_records_csv,
    run_experiment,
    summarize,
    write_records_csv,
)
from .frobenius import Triple, frobenius_exact
from .partition import partition_count_bruteforce, partition_count_closed


class UsageError(Exception):
    pass


def _triple(values: list[int]) -> Triple:
    try:
        return Triple.of(*values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def cmd_exact(args) -> None:
    values = args.values
    if any(v < 1 for v in values):
        raise UsageError(f"arguments must be positive integers, got {values}")
    try:
        g = frobenius_exact(values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"g": g}
    lines = [f"g = {g}"]
    if len(values) == 3:
        f = g + sum(values)
        payload["f"] = f
        lines.append(f"f = {f}")
    _emit(args, payload, lines)


_BOUND_METHODS = ("new", "erdos-graham", "selmer", "vitek", "davison", "bdr")


def _bound_value(method: str, t: Triple, args) -> tuple[float | int, str]:
    parts = (t.a, t.b, t.c)
    if method == "new":
        return frobenius_upper_new(t, args.iterations, args.combine), "<="
    if method == "erdos-graham":
        return bound_erdos_graham(parts), "<="
    if method == "selmer":
        return bound_selmer(parts), "<="
    if method == "vitek":
        return bound_vitek(parts), "<="
    if method == "davison":
        return bound_davison_lower(t), ">="
    if method == "bdr":
        return bound_bdr_sqrt(t), "<="
    raise UsageError(f"unknown method {method!r}")


def _fmt(v: float | int) -> str:
    return str(v) if isinstance(v, int) else f"{v:.6g}"


def cmd_bound(args) -> None:
    t = _triple(args.values)
    s = t.sum
    if args.method == "all":
        payload = {}
        lines = []
        for method in _BOUND_METHODS:
            value, rel = _bound_value(method, t, args)
            payload[method] = {"g": value, "f": value + s}
            lines.append(f"{method:<13} g {rel} {_fmt(value):<12} f {rel} {_fmt(value + s)}")
        _emit(args, payload, lines)
        return
    value, rel = _bound_value(args.method, t, args)
    _emit(args, {args.method: {"g": value, "f": value + s}},
          [_fmt(value), f"f-scale: {_fmt(value + s)}"])


def cmd_sigma(args) -> None:
    t, a, b, c = args.t, args.a, args.b, args.c
    try:
        if args.mode == "naive":
            value = sigma_naive(t, a, b, c)
        elif args.mode == "rademacher":
            value = sigma_via_rademacher(t, a, b, c)
        else:
            value = sigma_lower_algorithm(a, b, c, args.iterations).value
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if isinstance(value, Fraction):
        _emit(args, {"sigma": str(value)}, [str(value)])
    else:
        _emit(args, {"sigma_lower": value}, [f"{value:.12g}"])


def cmd_partition(args) -> None:
    n, a, b, c = args.n, args.a, args.b, args.c
    if n < 0 or min(a, b, c) < 1:
        raise UsageError("partition arguments must be nonnegative n and positive parts")
    pairwise = (
        math.gcd(a, b) == 1 and math.gcd(a, c) == 1 and math.gcd(b, c) == 1
    )
    count = (
        partition_count_closed(n, a, b, c)
        if pairwise
        else partition_count_bruteforce(n, (a, b, c))
    )
    _emit(args, {"count": count}, [str(count)])


def _print_summary(args, stats) -> None:
    if args.json:
        print(json.dumps(asdict(stats)))
        return
    for key, value in asdict(stats).items():
        print(f"{key} = {value:.9g}" if isinstance(value, float) else f"{key} = {value}")


def cmd_experiment(args) -> None:
    try:
        cfg = ExperimentConfig(
            count=args.count,
            min_value=args.min,
            max_value=args.max,
            seed=args.seed,
            iterations=args.iterations,
            combine=args.combine,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = run_experiment(cfg)
    try:
        write_records_csv(records, args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    _print_summary(args, summarize(records))


def cmd_summarize(args) -> None:
    try:
        records = read_records_csv(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not records:
        raise UsageError(f"{args.file} has no data rows")
    _print_summary(args, summarize(records))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobound",
        description="Frobenius numbers, Dedekind-Rademacher sums, and bounds for g(a,b,c)",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact Frobenius number g (and f for triples)")
    p.add_argument("values", type=int, nargs="+", metavar="N")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bound", help="upper/lower bounds for a pairwise-coprime triple")
    p.add_argument("--method", choices=_BOUND_METHODS + ("all",), default="all")
    p.add_argument("--iterations", type=int, default=2)
    p.add_argument("--combine", choices=("min", "max"), default="min")
    p.add_argument("values", type=int, nargs=3, metavar="N")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sigma", help="Fourier-Dedekind sum sigma_t(a,b;c) or its lower bound")
    p.add_argument("t", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--mode", choices=("naive", "rademacher", "lower"), default="naive")
    p.add_argument("--iterations", type=int, default=1)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("partition", help="restricted partition count p_{a,b,c}(n)")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("experiment", help="run the random-triple bound comparison")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=750)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=2)
    p.add_argument("--combine", choices=("min", "max"), default="max")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("summarize", help="summary statistics of an experiment CSV")
    p.add_argument("file", metavar="FILE")
    p.set_defaults(func=cmd_summarize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
