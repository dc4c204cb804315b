"""Command line front end: ``list``, ``eval``, ``verify`` and ``sweep``.

Exit codes: 0 when nothing failed, 1 when some verdict is FAIL, 2 on
configuration, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exactnum import DenominatorNotCoprime, NotInvertible, as_rational, is_prime, p_valuation
from .hyperg import HyperSeriesSpec, trunc_hyper
from .sweep import ConfigError, SweepConfig, run_sweep
from .theorems import EXACT_ZERO, REGISTRY, CheckParams, Status, run_check

# options whose values may start with "-" (negative rationals)
_VALUE_OPTS = {"--top", "--bottom", "--z", "--x", "--alpha", "--shifts", "--bottom-shifts", "--m-list"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _glue_values(argv):
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_OPTS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _rational_list(text: str) -> list[Fraction]:
    if text.strip() == "":
        return []
    try:
        return [as_rational(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a comma-separated list of rationals: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _modulus(text: str) -> int:
    try:
        if "^" in text:
            base, exp = text.split("^")
            m = int(base) ** int(exp)
        else:
            m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a modulus: {text!r}")
    if m < 2:
        raise argparse.ArgumentTypeError("modulus must be at least 2")
    return m


def _fmt_val(v):
    return "inf" if v == float("inf") else str(v)


def cmd_list(args) -> int:
    width = max(len(c) for c in REGISTRY)
    for cid, entry in REGISTRY.items():
        claimed = "exact 0" if entry.claimed == EXACT_ZERO else f"p^{entry.claimed}"
        flags = []
        if entry.modular:
            flags.append("modular")
        if entry.exploratory:
            flags.append("exploratory")
        print(f"{cid:<{width}}  {claimed:<8} {entry.gate}" + (f"  [{', '.join(flags)}]" if flags else ""))
    return 0


def cmd_eval(args) -> int:
    try:
        spec = HyperSeriesSpec(args.top, args.bottom, args.z, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        value = trunc_hyper(spec, args.mod)
    except (DenominatorNotCoprime, NotInvertible, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.mod is not None:
        print(f"{value.value} (mod {args.mod})")
        return 0
    out = str(value)
    if args.p is not None:
        if not is_prime(args.p):
            print(f"error: {args.p} is not prime", file=sys.stderr)
            return 2
        out += f" (v_{args.p} = {_fmt_val(p_valuation(value, args.p))})"
    print(out)
    return 0


def cmd_verify(args) -> int:
    raw = {"p": args.p, "r": args.r, "a": args.a, "s": args.s, "x": args.x, "alpha": args.alpha,
           "n": args.n, "m": args.m, "k": args.k, "m_list": args.m_list, "shifts": args.shifts,
           "bottom_shifts": args.bottom_shifts}
    params = CheckParams(**{k: v for k, v in raw.items() if v is not None})
    try:
        verdict = run_check(args.check, params, args.mode, args.claimed)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(verdict.to_dict(), indent=2, sort_keys=True))
    else:
        line = f"{verdict.check_id} {verdict.status.value}"
        if verdict.observed is not None:
            bound = "" if verdict.valuation_exact else ">="
            line += f"  claimed={verdict.claimed} observed={bound}{_fmt_val(verdict.observed)}"
        if verdict.value is not None:
            line += f"  value={verdict.value}"
        if verdict.reason:
            line += f"  ({verdict.reason})"
        print(line)
    return 1 if verdict.status is Status.FAIL else 0


def cmd_sweep(args) -> int:
    try:
        cfg = SweepConfig.load(args.config)
        if args.output:
            cfg.output = {"path": args.output, "format": args.format}
            cfg.validate()
        report = run_sweep(cfg, workers=args.workers)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    for cid, row in report.summary.items():
        print(f"{cid}: PASS={row['PASS']} FAIL={row['FAIL']} SKIP={row['SKIP']} "
              f"OBSERVED={row['OBSERVED']} min_v={row['min_valuation']}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypercong", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_list = sub.add_parser("list", help="show the checker registry")
    p_list.set_defaults(func=cmd_list)

    p_eval = sub.add_parser("eval", help="evaluate a truncated hypergeometric series")
    p_eval.add_argument("--top", type=_rational_list, required=True)
    p_eval.add_argument("--bottom", type=_rational_list, default=[])
    p_eval.add_argument("--z", type=_rational, default=Fraction(1))
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--p", type=int, help="also print the p-adic valuation")
    p_eval.add_argument("--mod", type=_modulus, help="evaluate modulo M (e.g. 49 or 7^2)")
    p_eval.set_defaults(func=cmd_eval)

    p_ver = sub.add_parser("verify", help="run one checker")
    p_ver.add_argument("--check", required=True, choices=sorted(REGISTRY))
    for name in ("p", "r", "a", "s", "n", "m", "k"):
        p_ver.add_argument(f"--{name}", type=int)
    p_ver.add_argument("--x", type=_rational)
    p_ver.add_argument("--alpha", type=_rational)
    p_ver.add_argument("--m-list", type=_int_list)
    p_ver.add_argument("--shifts", type=_int_list)
    p_ver.add_argument("--bottom-shifts", type=_int_list)
    p_ver.add_argument("--mode", choices=["rational", "modular", "cross-check"], default="rational")
    p_ver.add_argument("--claimed", type=int, help="override the claimed exponent")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_sw = sub.add_parser("sweep", help="run a sweep from a JSON config")
    p_sw.add_argument("--config", required=True)
    p_sw.add_argument("--output", help="override the report path from the config")
    p_sw.add_argument("--format", choices=["json", "csv"], default="json")
    p_sw.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_values(argv))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
