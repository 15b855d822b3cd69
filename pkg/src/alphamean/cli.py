"""Command-line front end.

Subcommands: ``average``, ``moving``, ``ema``, ``macd``, ``verify-bound``
and ``oracle``.  ``average`` and ``moving`` read plain numbers, one per
line, oldest first; ``ema`` and ``macd`` read dated close files in the
CSV/JSON formats of :mod:`alphamean.ingest`.  Exit codes: 0 success,
2 input error, 1 internal error (and, for ``verify-bound``, a bound
that does not hold).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import IO, Sequence

from alphamean.averages import WeightSchedule, alpha_average
from alphamean.comparison import rho_bound_check
from alphamean.indicators import IndicatorConfig, ema
from alphamean.ingest import FORMATS, ORIENTATIONS, build_report, read_closes, write_report
from alphamean.moving import moving_alpha_average
from alphamean.oracles import closed_form_linear, decaying_sequence_value

_FAMILIES = ("arithmetic", "weighted", "weighted-arithmetic", "exponential", "constant", "binomial")


def _schedule_from_args(args: argparse.Namespace) -> WeightSchedule:
    family = args.family
    if family == "arithmetic":
        return WeightSchedule.arithmetic()
    if family in ("weighted", "weighted-arithmetic"):
        return WeightSchedule.weighted_arithmetic()
    if family in ("exponential", "constant"):
        if args.alpha is None:
            raise ValueError(f"family {family!r} needs --alpha")
        return WeightSchedule.constant(args.alpha)
    if args.mu is None or args.nu is None:
        raise ValueError("family 'binomial' needs --mu and --nu")
    return WeightSchedule.binomial_family(args.mu, args.nu)


def _open_input(path: str | None) -> IO[bytes]:
    if path is None or path == "-":
        return sys.stdin.buffer
    return open(path, "rb")


def _read_numbers(path: str | None) -> list[float]:
    with _open_input(path) as handle:
        text = handle.read().decode("utf-8")
    values = []
    for line_num, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            values.append(float(stripped))
        except ValueError:
            raise ValueError(f"line {line_num}: not a number: {stripped!r}") from None
    if not values:
        raise ValueError("no input values")
    return values


def _read_close_series(args: argparse.Namespace):
    with _open_input(args.input) as handle:
        return read_closes(handle, format=args.input_format, orientation=args.orientation)


def _emit(value: float) -> None:
    print(f"{value:.6g}")


def _write_bytes(data: bytes) -> None:
    buffer = getattr(sys.stdout, "buffer", None)
    if buffer is not None:
        buffer.write(data)
        buffer.flush()
    else:
        sys.stdout.write(data.decode("utf-8"))


def _cmd_average(args: argparse.Namespace) -> int:
    values = _read_numbers(args.input)
    _emit(alpha_average(values, _schedule_from_args(args)).limit)
    return 0


def _cmd_moving(args: argparse.Namespace) -> int:
    values = _read_numbers(args.input)
    series = moving_alpha_average(values, args.window, _schedule_from_args(args))
    for value in series.values:
        _emit(value)
    return 0


def _cmd_ema(args: argparse.Namespace) -> int:
    closes = _read_close_series(args)
    _emit(ema(closes, args.n, args.rho))
    return 0


def _cmd_macd(args: argparse.Namespace) -> int:
    closes = _read_close_series(args)
    config = IndicatorConfig(n1=args.n1, n2=args.n2, n0=args.n0, rho=args.rho)
    _write_bytes(write_report(build_report(closes, config), format=args.format))
    return 0


def _cmd_verify_bound(args: argparse.Namespace) -> int:
    holds = rho_bound_check(args.rho, args.n)
    exact = (1.0 - args.rho / (args.n + 1.0)) ** args.n
    print(f"(1 - rho/(N+1))^N = {exact:.6f}")
    print(f"exp(-rho) = {math.exp(-args.rho):.6f}")
    return 0 if holds else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.beta is not None:
        if args.s is None:
            raise ValueError("--beta needs --s (the sequence index)")
        _emit(decaying_sequence_value(args.s, args.beta))
        return 0
    if args.family is None or args.n is None:
        raise ValueError("oracle needs either --family with --n, or --s with --beta")
    family = "weighted" if args.family in ("weighted", "weighted-arithmetic") else args.family
    _emit(closed_form_linear(family, args.n, args.alpha))
    return 0


def _add_family_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=_FAMILIES, default="arithmetic",
                        help="weight schedule family (default: arithmetic)")
    parser.add_argument("--alpha", type=float, help="constant weight for exponential/constant")
    parser.add_argument("--mu", type=float, help="binomial family parameter mu")
    parser.add_argument("--nu", type=float, help="binomial family parameter nu")


def _add_close_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="close file (default: stdin)")
    parser.add_argument("--input-format", choices=FORMATS, default="csv",
                        help="close file format (default: csv)")
    parser.add_argument("--orientation", choices=ORIENTATIONS, default="oldest-first",
                        help="row order of the input (default: oldest-first)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphamean",
        description="Recursive weighted averages and the EMA/MACD indicator stack.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("average", help="terminal weighted average of numbers (one per line, oldest first)")
    _add_family_flags(p)
    p.add_argument("--input", help="file of numbers (default: stdin)")
    p.set_defaults(func=_cmd_average)

    p = sub.add_parser("moving", help="windowed averages of numbers (one per line, oldest first)")
    _add_family_flags(p)
    p.add_argument("--window", type=int, required=True, help="window length N")
    p.add_argument("--input", help="file of numbers (default: stdin)")
    p.set_defaults(func=_cmd_moving)

    p = sub.add_parser("ema", help="N-day EMA of a dated close file")
    p.add_argument("--n", type=int, required=True, help="EMA length N")
    p.add_argument("--rho", type=float, default=2.0, help="weight model parameter (default: 2)")
    _add_close_input_flags(p)
    p.set_defaults(func=_cmd_ema)

    p = sub.add_parser("macd", help="full MACD indicator report from a dated close file")
    p.add_argument("--n1", type=int, default=12, help="short EMA length (default: 12)")
    p.add_argument("--n2", type=int, default=26, help="long EMA length (default: 26)")
    p.add_argument("--n0", type=int, default=9, help="signal EMA length (default: 9)")
    p.add_argument("--rho", type=float, default=2.0, help="weight model parameter (default: 2)")
    _add_close_input_flags(p)
    p.add_argument("--format", choices=FORMATS, default="csv",
                   help="report output format (default: csv)")
    p.set_defaults(func=_cmd_macd)

    p = sub.add_parser("verify-bound", help="compare (1 - rho/(N+1))^N against exp(-rho)")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--n", type=int, required=True, help="window length N")
    p.set_defaults(func=_cmd_verify_bound)

    p = sub.add_parser("oracle", help="closed-form reference values")
    p.add_argument("--family", choices=("arithmetic", "weighted", "weighted-arithmetic", "exponential"),
                   help="closed form for the ramp series 1, 2, ..., n")
    p.add_argument("--n", type=int, help="series length for the closed form")
    p.add_argument("--alpha", type=float, help="weight for the exponential closed form")
    p.add_argument("--s", type=int, help="index into the decaying test sequence")
    p.add_argument("--beta", type=float, help="decay parameter of the test sequence")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1
    except Exception as exc:  # internal failure, not an input problem
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
