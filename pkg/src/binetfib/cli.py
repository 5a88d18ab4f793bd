"""Command-line entry point: ``binetfib {seq,verify,curve} ...``.

Exit status is 0 on success, 1 when a verification claim fails and 2 for
usage or precondition errors.  Output is deterministic: reals use 17
significant digits, integers are printed in full.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import curve
from .errors import BinetFibError, PreconditionError, RangeExceeded
from .exact_core import MAX_INDEX, GenSpec, fib, gen_fib_terms, lucas
from .export import (AREA_HEADER, areas_csv, areas_rows, csv_table, curvature_csv,
                     fmt_real, plain_table, render_svg, samples_csv)
from .linear_combinations import CoefficientVector, combo_terms
from .polynomials import fib_poly_symbolic_list
from .subsequences import EquiSpec, equi_terms
from .suites import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_TERMS = 100_000


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _coeff_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.replace(" ", "").split(",") if c != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"coefficients must be integers: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="binetfib",
                     description="Fibonacci-family sequences, identity checks and the Binet-Fibonacci curve.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    seq = sub.add_parser("seq", help="emit exact sequence terms")
    seq.add_argument("kind", choices=("fib", "lucas", "gen", "equi", "poly", "combo"))
    seq.add_argument("n_from", type=int)
    seq.add_argument("n_to", type=int)
    seq.add_argument("--g0", type=int, default=0)
    seq.add_argument("--g1", type=int, default=1)
    seq.add_argument("--p", type=int, default=1)
    seq.add_argument("--q", type=int, default=1)
    seq.add_argument("--k", type=int, help="stride for equi")
    seq.add_argument("--alpha", type=int, default=0, help="residue for equi")
    seq.add_argument("--coeffs", type=_coeff_list, help="comma-separated alpha_0..alpha_k for combo")
    seq.add_argument("--symbolic", action="store_true", help="poly: print F_n(p, q) symbolically")
    seq.add_argument("--format", choices=("table", "csv", "json"), default="table")
    seq.add_argument("-o", "--output")

    ver = sub.add_parser("verify", help="check identities; exit 1 if any claim fails")
    ver.add_argument("suite", choices=("theorem1", "areas", "lambda", "dual", "superposition", "all"))
    ver.add_argument("--k-max", type=int)
    ver.add_argument("--n-max", type=int)
    ver.add_argument("--panels", type=int)
    ver.add_argument("--count", type=int)
    ver.add_argument("--seed", type=int)
    ver.add_argument("--format", choices=("json", "table", "csv"), default="json")
    ver.add_argument("-o", "--output")

    cur = sub.add_parser("curve", help="sample, measure and render the Binet-Fibonacci curve")
    csub = cur.add_subparsers(dest="sub", required=True, parser_class=_Parser)

    def t_range(p, lo="0", hi="6", steps=601):
        p.add_argument("--from", dest="t_from", type=_rational, default=Fraction(lo))
        p.add_argument("--to", dest="t_to", type=_rational, default=Fraction(hi))
        p.add_argument("--steps", type=int, default=steps)

    smp = csub.add_parser("sample")
    t_range(smp)
    smp.add_argument("--format", choices=("csv", "json", "table", "svg"), default="csv")
    smp.add_argument("-o", "--output")
    smp.add_argument("--plot", help="also write a matplotlib figure (png/pdf/svg)")

    area = csub.add_parser("area")
    area.add_argument("--n-min", type=int, default=0)
    area.add_argument("--n-max", type=int, default=20)
    area.add_argument("--panels", type=int, default=curve.DEFAULT_PANELS)
    area.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    area.add_argument("-o", "--output")
    area.add_argument("--plot")

    kap = csub.add_parser("curvature")
    t_range(kap)
    kap.add_argument("--direction", choices=curve.DIRECTIONS,
                     help="report the curvature ratio at --probe instead of sampling")
    kap.add_argument("--k", type=int, default=1)
    kap.add_argument("--probe", type=_rational)
    kap.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    kap.add_argument("-o", "--output")
    kap.add_argument("--plot")

    spi = csub.add_parser("spiral")
    spi.add_argument("--t-min", type=_rational, default=Fraction(-40))
    spi.add_argument("--step", type=_rational, default=Fraction(5))
    spi.add_argument("--format", choices=("json", "table"), default="json")
    spi.add_argument("-o", "--output")

    svg = csub.add_parser("svg")
    t_range(svg, "-4", "4", 2000)
    svg.add_argument("-o", "--output")
    return parser


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _seq_terms(args) -> tuple[list, dict]:
    lo, hi = args.n_from, args.n_to
    if lo > hi:
        raise PreconditionError(f"n_from ({lo}) must not exceed n_to ({hi})")
    if hi - lo + 1 > MAX_TERMS:
        raise PreconditionError(f"at most {MAX_TERMS} terms per call")
    if max(abs(lo), abs(hi)) > MAX_INDEX:
        raise PreconditionError(f"indices must satisfy |n| <= {MAX_INDEX}")
    kind = args.kind
    if kind == "fib":
        return [fib(n) for n in range(lo, hi + 1)], {}
    if kind == "lucas":
        return [lucas(n) for n in range(lo, hi + 1)], {}
    if kind in ("gen", "poly") and lo < 0:
        raise PreconditionError(f"{kind} needs n_from >= 0 (negative indices are undefined)")
    if kind == "gen":
        spec = GenSpec(args.g0, args.g1, args.p, args.q)
        return gen_fib_terms(spec, lo, hi), {"g0": spec.g0, "g1": spec.g1, "p": spec.p, "q": spec.q}
    if kind == "poly":
        if args.symbolic:
            if hi > 400:
                raise PreconditionError("symbolic polynomials are limited to n <= 400")
            return [str(f) for f in fib_poly_symbolic_list(hi)[lo:]], {"symbolic": True}
        return gen_fib_terms(GenSpec(0, 1, args.p, args.q), lo, hi), {"p": args.p, "q": args.q}
    if kind == "equi":
        if args.k is None:
            raise PreconditionError("equi needs --k (and optionally --alpha)")
        if lo < 0:
            raise PreconditionError("equi needs n_from >= 0")
        spec = EquiSpec(args.k, args.alpha)
        return equi_terms(spec, lo, hi), {"k": spec.k, "alpha": spec.alpha}
    if args.coeffs is None:
        raise PreconditionError("combo needs --coeffs a0,a1,...")
    cv = CoefficientVector(args.coeffs)
    return combo_terms(cv, lo, hi), {"coeffs": list(cv.alphas)}


def cmd_seq(args) -> int:
    values, params = _seq_terms(args)
    ns = range(args.n_from, args.n_to + 1)
    if args.format == "json":
        text = _dump({"kind": args.kind, "params": params,
                      "terms": [{"n": n, "value": v} for n, v in zip(ns, values)]})
    elif args.format == "csv":
        text = csv_table(("n", "value"), zip(ns, values))
    elif args.kind == "poly" and args.symbolic:
        text = "\n".join(f"F_{n} = {v}" for n, v in zip(ns, values)) + "\n"
    else:
        text = " ".join(str(v) for v in values) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = {"k_max": args.k_max, "n_max": args.n_max, "panels": args.panels,
              "count": args.count, "seed": args.seed}
    report = run_suite(args.suite, **bounds)
    data = report.to_dict()
    rows = [(c["id"], c["status"], "" if c["max_residual"] is None else fmt_real(c["max_residual"]),
             c["paper_ref"]) for c in data["claims"]]
    if args.format == "json":
        text = _dump(data)
    elif args.format == "csv":
        text = csv_table(("id", "status", "max_residual", "paper_ref"), rows)
    else:
        text = plain_table(("id", "status", "max_residual", "paper_ref"), rows)
        text += f"suite {data['suite']}: {'PASS' if data['passed'] else 'FAIL'}\n"
    _emit(text, args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def _points_rows(points):
    return [(p.t, p.x, p.y) for p in points]


def cmd_curve(args) -> int:
    sub = args.sub
    if sub in ("sample", "svg"):
        points = curve.sample(args.t_from, args.t_to, args.steps)
        if sub == "svg" or args.format == "svg":
            crossings = [curve.curve_point(n) for n in curve.real_axis_crossings(args.t_from, args.t_to)]
            _emit(render_svg(points, crossings), args.output)
            return EXIT_OK
        if args.format == "csv":
            text = samples_csv(points)
        elif args.format == "table":
            text = plain_table(("t", "x", "y"), _points_rows(points))
        else:
            text = _dump({"points": [{"t": float(p.t), "x": float(p.x), "y": float(p.y)}
                                     for p in points]})
        _emit(text, args.output)
        if args.plot:
            from .plotting import plot_curve
            crossings = [curve.curve_point(n) for n in curve.real_axis_crossings(args.t_from, args.t_to)]
            plot_curve(points, args.plot, crossings)
        return EXIT_OK

    if sub == "area":
        if args.n_min > args.n_max:
            raise PreconditionError("--n-min must not exceed --n-max")
        if args.n_min > args.n_max:
            raise PreconditionError("--n-min must not exceed --n-max")
        if max(abs(args.n_min), abs(args.n_max)) > curve.AREA_INDEX_MAX:
            raise RangeExceeded(f"segment index exceeds {curve.AREA_INDEX_MAX}")
        segments = [curve.area_segment(n, args.panels) for n in range(args.n_min, args.n_max + 1)]
        if args.format == "csv":
            text = areas_csv(segments)
        elif args.format == "table":
            text = plain_table(AREA_HEADER, areas_rows(segments))
        else:
            text = _dump({"area_limit": float(curve.area_limit()),
                          "segments": [dict(zip(AREA_HEADER, (r[0],) + tuple(float(v) for v in r[1:])))
                                       for r in areas_rows(segments)]})
        _emit(text, args.output)
        if args.plot:
            from .plotting import plot_areas
            plot_areas(segments, args.plot)
        return EXIT_OK

    if sub == "curvature":
        if args.direction is not None:
            if args.probe is None:
                raise PreconditionError("--direction needs --probe")
            rep = curve.curvature_ratio_report(args.direction, args.k, args.probe)
            row = {"direction": rep.direction, "k": rep.k, "probe": float(rep.probe),
                   "claimed_limit": float(rep.claimed_limit),
                   "forward_ratio": float(rep.forward_ratio),
                   "forward_error": float(rep.forward_error),
                   "outward_ratio": float(rep.outward_ratio),
                   "outward_error": float(rep.outward_error)}
            if args.format == "json":
                text = _dump(row)
            else:
                render = csv_table if args.format == "csv" else plain_table
                text = render(tuple(row), [tuple(row.values())])
            _emit(text, args.output)
            return EXIT_OK
        samples = [curve.curvature(t) for t in curve.grid(args.t_from, args.t_to, args.steps)]
        if args.format == "csv":
            text = curvature_csv(samples)
        elif args.format == "table":
            text = plain_table(("t", "kappa"), [(s.t, s.kappa) for s in samples])
        else:
            text = _dump({"samples": [{"t": float(s.t), "kappa": float(s.kappa)} for s in samples]})
        _emit(text, args.output)
        if args.plot:
            from .plotting import plot_curvature
            plot_curvature(samples, args.plot)
        return EXIT_OK

    rep = curve.spiral_diagnostics(args.t_min, args.step)
    data = rep.to_dict()
    if args.format == "json":
        text = _dump(data)
    else:
        text = plain_table(("t", "angle", "angle_error"),
                           [(a["t"], a["angle"], a["error"]) for a in data["angles"]])
        text += plain_table(("n", "F_n+2/F_n", "err_vs_phi2", "F_n/F_n+2", "err_vs_phi2"),
                            [(r["n"], r["forward"], r["forward_error"], r["reversed"],
                              r["reversed_error"]) for r in data["ratios"]])
        text += f"angle_limit {fmt_real(data['angle_limit'])}\n"
        text += f"kappa_at_t_min {fmt_real(data['kappa_at_t_min'])}\n"
    _emit(text, args.output)
    return EXIT_OK


COMMANDS = {"seq": cmd_seq, "verify": cmd_verify, "curve": cmd_curve}


def _join_direction(argv: list[str]) -> list[str]:
    # argparse takes a bare "-inf" for an option flag
    out = []
    for arg in argv:
        if out and out[-1] == "--direction" and arg in curve.DIRECTIONS:
            out[-1] = f"--direction={arg}"
        else:
            out.append(arg)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_direction(sys.argv[1:] if argv is None else list(argv)))
    try:
        return COMMANDS[args.command](args)
    except BinetFibError as exc:
        print(f"binetfib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"binetfib: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
