"""Command-line front end: experiment tables and ad-hoc oracle queries.

Every command emits one deterministic CSV or JSON table (fixed column
order, fixed precision, LF line endings) so downstream plotting scripts can
rely on the byte stream.  Exit codes: 0 success, 1 usage error, 2
verification-trend failure, 3 quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from typing import Sequence

from . import braid, conv, fourier
from .seq import l1_norm

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TREND = 2
EXIT_QUADRATURE = 3


@dataclass(frozen=True)
class Defaults:
    """Single source for every CLI default; flags override, nothing else does."""

    window: int = 1024
    cap_factor: float = 2.0
    probes: str = "-8..8"
    precision: int = 12
    fmt: str = "csv"


DEFAULTS = Defaults()


@dataclass(frozen=True)
class OutputFormat:
    kind: str = DEFAULTS.fmt
    precision: int = DEFAULTS.precision

    def __post_init__(self) -> None:
        if self.kind not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.kind!r}")
        if not 1 <= self.precision <= 17:
            raise ValueError(f"precision must be in 1..17, got {self.precision}")

    def fnum(self, value: float) -> str:
        return f"{value:.{self.precision}e}"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D102 - argparse hook
        raise UsageError(message)


def _csv_cell(value, fmt: OutputFormat) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return fmt.fnum(value)
    return str(value)


def _json_cell(value, fmt: OutputFormat):
    if isinstance(value, float):
        return float(fmt.fnum(value))
    return value


def _emit(fmt: OutputFormat, columns: Sequence[str], rows: Sequence[dict], stream) -> None:
    if fmt.kind == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[c], fmt) for c in columns])
    else:
        payload = {"rows": [{c: _json_cell(row[c], fmt) for c in columns} for row in rows]}
        stream.write(json.dumps(payload, indent=2))
        stream.write("\n")


def _parse_probes(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if lo > hi:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return tuple(sorted({int(tok) for tok in text.split(",") if tok.strip()}))
    except ValueError:
        raise UsageError(f"cannot parse probe list {text!r}; use e.g. -8..8 or 0,1,2") from None


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"cannot parse {what} list {text!r}") from None
    if not values:
        raise UsageError(f"{what} list must be nonempty")
    return values


def _fmt_from(args: argparse.Namespace) -> OutputFormat:
    try:
        return OutputFormat(kind=args.format, precision=args.precision)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cap_for(window: int, cap_factor: float) -> int:
    if cap_factor <= 0:
        raise UsageError(f"--cap-factor must be positive, got {cap_factor}")
    cap = math.ceil(cap_factor * window)
    if cap < window:
        raise UsageError(f"--cap-factor {cap_factor} gives cap {cap} < window {window}")
    return cap


def _require_window(window: int) -> int:
    if window < 1:
        raise UsageError(f"--window must be >= 1, got {window}")
    return window


def _cmd_tau(args: argparse.Namespace) -> int:
    fmt = _fmt_from(args)
    N = _require_window(args.window)
    t = braid.tau(N)
    rows = [{"n": n, "coeff": t.at(n).real} for n in t.indices()]
    _emit(fmt, ("n", "coeff"), rows, sys.stdout)
    return EXIT_OK


def _cmd_cn(args: argparse.Namespace) -> int:
    fmt = _fmt_from(args)
    if args.m < 0:
        raise UsageError(f"--m must be >= 0, got {args.m}")
    if args.method == "closed":
        value = fourier.cn_theta_power_closed(args.n, args.m)
    elif args.method == "quad":
        value = fourier.cn_theta_power_quad(args.n, args.m)
    else:
        N = _require_window(args.window)
        cap = _cap_for(N, args.cap_factor)
        value = conv.power(braid.tau(N), args.m, cap).at(args.n)
    row = {"n": args.n, "m": args.m, "method": args.method, "re": value.real, "im": value.imag}
    _emit(fmt, ("n", "m", "method", "re", "im"), [row], sys.stdout)
    return EXIT_OK


def _cmd_verify_exp(args: argparse.Namespace) -> int:
    fmt = _fmt_from(args)
    windows = _parse_int_list(args.windows, "window")
    terms = None if args.terms == "auto" else _parse_int_list(args.terms, "term")
    probes = _parse_probes(args.probes)
    try:
        report = braid.verify_exp_tau(windows, terms, probes, args.cap_factor)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    columns = ("N", "M", "err_c1", "err_off", "l2_err", "discarded_mass")
    rows = [
        {
            "N": r.N,
            "M": r.M,
            "err_c1": r.err_c1,
            "err_off": r.err_off,
            "l2_err": r.l2_err,
            "discarded_mass": r.discarded_mass,
        }
        for r in report.rows
    ]
    _emit(fmt, columns, rows, sys.stdout)
    violations = braid.trend_violations(report)
    if violations:
        for line in violations:
            print(f"trend violation: {line}", file=sys.stderr)
        return EXIT_TREND
    return EXIT_OK


def _cmd_parseval(args: argparse.Namespace) -> int:
    fmt = _fmt_from(args)
    if args.j < 0 or args.k < 0:
        raise UsageError(f"--j and --k must be >= 0, got ({args.j}, {args.k})")
    N = _require_window(args.window)
    lhs, rhs = fourier.parseval_pair(args.j, args.k, N)
    gap = abs(lhs - rhs)
    bound = 2.0 / N if (args.j, args.k) == (1, 1) else None
    row = {
        "j": args.j,
        "k": args.k,
        "N": N,
        "lhs_re": lhs.real,
        "lhs_im": lhs.imag,
        "rhs_re": rhs.real,
        "rhs_im": rhs.imag,
        "gap": gap,
        "bound": bound,
    }
    columns = ("j", "k", "N", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "gap", "bound")
    _emit(fmt, columns, [row], sys.stdout)
    if bound is not None and gap > bound:
        print(f"parseval gap {gap:.6e} exceeds the bound {bound:.6e}", file=sys.stderr)
        return EXIT_TREND
    return EXIT_OK


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    fmt = _fmt_from(args)
    N = _require_window(args.window)
    cap = _cap_for(N, args.cap_factor)
    probes = _parse_probes(args.probes)
    bad = [n for n in probes if abs(n) > cap]
    if bad:
        raise UsageError(f"probes {bad} fall outside the cap window [-{cap}, {cap}]")
    if args.terms == "auto":
        M = braid.auto_terms(abs(args.k) * l1_norm(braid.tau(N)))
    else:
        try:
            M = int(args.terms)
        except ValueError:
            raise UsageError(f"--terms must be an integer or auto, got {args.terms!r}") from None
        if M < 0:
            raise UsageError(f"--terms must be >= 0, got {M}")
    approx = braid.reconstruct(braid.BraidPower(args.k), M, N, cap)
    rows = []
    for n in probes:
        value = approx.at(n)
        target = 1.0 if n == args.k else 0.0
        rows.append(
            {"n": n, "re": value.real, "im": value.imag, "target": target,
             "err": abs(value - target)}
        )
    _emit(fmt, ("n", "re", "im", "target", "err"), rows, sys.stdout)
    return EXIT_OK


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default=DEFAULTS.fmt,
                        help="output format (default %(default)s)")
    parser.add_argument("--precision", type=int, default=DEFAULTS.precision,
                        help="decimal digits for floating values (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidlog",
                     description="Sequence-exponential experiments in l2(Z).")
    sub = parser.add_subparsers(dest="command")

    p_tau = sub.add_parser("tau", help="print the logarithm sequence coefficients")
    p_tau.add_argument("--window", type=int, default=DEFAULTS.window,
                       help="window radius N (default %(default)s)")
    _add_output_flags(p_tau)
    p_tau.set_defaults(func=_cmd_tau)

    p_cn = sub.add_parser("cn", help="coefficient c_n of the m-th sequence power")
    p_cn.add_argument("--n", type=int, required=True, help="coefficient index")
    p_cn.add_argument("--m", type=int, required=True, help="convolution power")
    p_cn.add_argument("--method", choices=("closed", "quad", "conv"), default="closed",
                      help="closed-form recurrence, quadrature, or truncated convolution")
    p_cn.add_argument("--window", type=int, default=DEFAULTS.window,
                      help="window radius for --method conv (default %(default)s)")
    p_cn.add_argument("--cap-factor", type=float, default=DEFAULTS.cap_factor,
                      help="clamp cap as a multiple of the window (default %(default)s)")
    _add_output_flags(p_cn)
    p_cn.set_defaults(func=_cmd_cn)

    p_verify = sub.add_parser("verify-exp",
                              help="convergence study of exp(tau) toward delta(1)")
    p_verify.add_argument("--windows", default=str(DEFAULTS.window),
                          help="comma-separated window radii (default %(default)s)")
    p_verify.add_argument("--terms", default="auto",
                          help="comma-separated series lengths, or auto (default)")
    p_verify.add_argument("--probes", default=DEFAULTS.probes,
                          help="probe indices, lo..hi or comma list; pass values starting "
                               "with a dash as --probes=-8..8 (default %(default)s)")
    p_verify.add_argument("--cap-factor", type=float, default=DEFAULTS.cap_factor,
                          help="clamp cap as a multiple of each window (default %(default)s)")
    _add_output_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify_exp)

    p_parseval = sub.add_parser("parseval",
                                help="coefficient-space vs integral inner product")
    p_parseval.add_argument("--j", type=int, required=True, help="left power")
    p_parseval.add_argument("--k", type=int, required=True, help="right power")
    p_parseval.add_argument("--window", type=int, default=DEFAULTS.window,
                            help="window radius N (default %(default)s)")
    _add_output_flags(p_parseval)
    p_parseval.set_defaults(func=_cmd_parseval)

    p_rec = sub.add_parser("reconstruct",
                           help="rebuild delta(k) from the degree-i invariants of q**k")
    p_rec.add_argument("--k", type=int, required=True, help="generator power")
    p_rec.add_argument("--terms", default="auto",
                       help="series length M, or auto (default)")
    p_rec.add_argument("--window", type=int, default=DEFAULTS.window,
                       help="window radius N (default %(default)s)")
    p_rec.add_argument("--probes", default=DEFAULTS.probes,
                       help="probe indices, lo..hi or comma list; pass values starting "
                            "with a dash as --probes=-8..8 (default %(default)s)")
    p_rec.add_argument("--cap-factor", type=float, default=DEFAULTS.cap_factor,
                       help="clamp cap as a multiple of the window (default %(default)s)")
    _add_output_flags(p_rec)
    p_rec.set_defaults(func=_cmd_reconstruct)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise UsageError("a subcommand is required (see --help)")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except fourier.QuadratureConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
