"""Command-line front end.

    mvexp exp --algebra 0,3 --mv "-8-6*e2-9*e3+5*e12-5*e13+6*e23-4*e123"
    mvexp trig --algebra 3,0 --fn cos --mv "e1 + 2*e23"
    mvexp ode --algebra 3,0 --A e12 --x0 e1 --t 3.14159265 --samples 2
    mvexp selftest

Exit status: 0 ok, 1 selftest failure, 2 parse/usage/overflow error, 3 series did not converge,
4 closed form and series disagree beyond ``--tol``.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

import numpy as np

from .algebra import Signature, max_abs_diff
from .closed import exp_closed_detail
from .golden import timed_golden
from .ode import OdeProblem, constant_forcing, solve
from .report import OutputRecord
from .series import SeriesConfig, SeriesConvergenceError, exp_series_detail
from .textio import ParseError, format_multivector, format_number, parse_multivector
from .trig import FUNCTIONS, uses_series

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_CONVERGENCE = 3
EXIT_DISAGREE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _signature(text: str) -> Signature:
    try:
        return Signature.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="json", action="store_true", help="JSON lines output")
    g.add_argument("--text", dest="json", action="store_false", help="human-readable output (default)")
    p.set_defaults(json=False)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mvexp", description="Exponentials of 3D Clifford multivectors.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exp", help="exponential of a multivector")
    p.add_argument("--algebra", type=_signature, required=True, help="signature p,q")
    p.add_argument("--mv", required=True, help="multivector expression")
    p.add_argument("--engine", choices=("closed", "series", "both"), default="both")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="allowed closed/series discrepancy, relative to max(1, max|result|)")
    p.add_argument("--terms", type=int, default=200, help="series term cap")
    _add_output_flags(p)

    p = sub.add_parser("trig", help="cos/sin/cosh/sinh of a multivector")
    p.add_argument("--algebra", type=_signature, required=True)
    p.add_argument("--mv", required=True)
    p.add_argument("--fn", choices=tuple(FUNCTIONS), required=True)
    p.add_argument("--terms", type=int, default=200)
    _add_output_flags(p)

    p = sub.add_parser("ode", help="solve dX/dt = A X (+ X B) (+ f)")
    p.add_argument("--algebra", type=_signature, required=True)
    p.add_argument("--A", dest="a", required=True)
    p.add_argument("--B", dest="b")
    p.add_argument("--x0", required=True)
    p.add_argument("--t", type=float, required=True, help="final time")
    p.add_argument("--samples", type=int, default=2, help="number of equally spaced times in [0, t]")
    p.add_argument("--force", help="constant forcing term f")
    p.add_argument("--steps", type=int, default=400, help="Simpson intervals for the forcing integral")
    _add_output_flags(p)

    sub.add_parser("selftest", help="check the worked examples")
    return parser


def _print_text_exp(rec: OutputRecord, out) -> None:
    print(f"algebra      {Signature(*rec.algebra)}", file=out)
    print(f"input        {format_multivector(rec.input)}", file=out)
    if rec.engine == "series":
        print(f"series       {format_multivector(rec.result)}", file=out)
    else:
        print(f"closed       {format_multivector(rec.result)}", file=out)
    if rec.series_result is not None:
        print(f"series       {format_multivector(rec.series_result)}", file=out)
    if rec.mixing is not None:
        m = rec.mixing
        print(f"a+^2         {format_number(m.a_plus_sq)}", file=out)
        print(f"a-^2         {format_number(m.a_minus_sq)}", file=out)
        if m.a_plus is not None:
            print(f"a+           {format_number(m.a_plus)}", file=out)
            print(f"a-           {format_number(m.a_minus)}", file=out)
        print(f"branch       {rec.branch}", file=out)
    if rec.series is not None:
        s = rec.series
        print(f"series info  terms={s['terms']} squarings={s['squarings']} "
              f"last_correction={s['last_correction']:.3g}", file=out)
    if rec.discrepancy is not None:
        print(f"discrepancy  {rec.discrepancy:.3g}", file=out)


def run_exp(args, out=None) -> int:
    out = out or sys.stdout
    a = parse_multivector(args.mv, args.algebra)
    cfg = SeriesConfig(max_terms=args.terms)
    rec = OutputRecord("exp", (a.sig.p, a.sig.q), a, a, args.engine)
    if args.engine in ("closed", "both"):
        res = exp_closed_detail(a)
        rec.result, rec.mixing, rec.branch = res.value, res.mixing, res.branch
    if args.engine in ("series", "both"):
        s = exp_series_detail(a, cfg)
        rec.series = {"terms": s.terms, "squarings": s.squarings,
                      "last_correction": s.last_correction}
        if args.engine == "series":
            rec.result = s.value
        else:
            rec.series_result = s.value
            rec.discrepancy = max_abs_diff(rec.result, s.value)
    if args.json:
        print(rec.to_json(), file=out)
    else:
        _print_text_exp(rec, out)
    if rec.discrepancy is not None and rec.discrepancy > args.tol * max(1.0, rec.result.max_abs()):
        print(f"error: closed form and series differ by {rec.discrepancy:.3g}", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def run_trig(args, out=None) -> int:
    out = out or sys.stdout
    a = parse_multivector(args.mv, args.algebra)
    cfg = SeriesConfig(max_terms=args.terms)
    value = FUNCTIONS[args.fn](a, cfg)
    engine = "series" if uses_series(args.fn, a) else "closed"
    rec = OutputRecord("trig", (a.sig.p, a.sig.q), a, value, engine, function=args.fn)
    if args.json:
        print(rec.to_json(), file=out)
    else:
        print(f"{args.fn}({format_multivector(a)}) = {format_multivector(value)}", file=out)
    return EXIT_OK


def sample_times(t: float, samples: int) -> list[float]:
    if samples < 1:
        raise ValueError("--samples must be >= 1")
    if samples == 1:
        return [t]
    return [float(x) for x in np.linspace(0.0, t, samples)]


def run_ode(args, out=None) -> int:
    out = out or sys.stdout
    sig = args.algebra
    a = parse_multivector(args.a, sig)
    x0 = parse_multivector(args.x0, sig)
    b = parse_multivector(args.b, sig) if args.b else None
    forcing = constant_forcing(parse_multivector(args.force, sig)) if args.force else None
    if b is not None and forcing is not None:
        raise ParseError("--B and --force cannot be combined")
    problem = OdeProblem(a, x0, args.t, forcing=forcing, B=b, steps=args.steps)
    if not args.json:
        print("t".ljust(24) + "X(t)", file=out)
    for t in sample_times(args.t, args.samples):
        x = solve(problem, t)
        if args.json:
            rec = OutputRecord("ode", (sig.p, sig.q), x0, x, "closed", t=t)
            print(rec.to_json(), file=out)
        else:
            print(format_number(t).ljust(24) + format_multivector(x), file=out)
    return EXIT_OK


def run_selftest(args, out=None) -> int:
    out = out or sys.stdout
    results, elapsed = timed_golden()
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.label:<10} rel_err={r.rel_error:.2e} branch={r.branch}", file=out)
    print(f"{sum(r.ok for r in results)}/{len(results)} passed in {elapsed:.3f} s", file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


COMMANDS = {"exp": run_exp, "trig": run_trig, "ode": run_ode, "selftest": run_selftest}


# flags whose values may start with '-' (multivector expressions, times)
_VALUE_FLAGS = ("--mv", "--A", "--B", "--x0", "--force", "--t")


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--mv -8-e1`` as ``--mv=-8-e1`` so argparse keeps the value."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_attach_values(argv))
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SeriesConvergenceError as exc:
        print(f"convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OverflowError as exc:
        print(f"error: result is not representable as float64 ({exc})", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
