"""Command-line interface: ``solenoid-scatter <subcommand> [options]``.

Tabular output is CSV with one ``#`` header line echoing every parameter,
followed by a column-name row. Floats are written with ``repr`` so a re-read
reproduces them bit for bit. Angles are in radians.

Exit codes: 0 success, 1 invalid input, 2 numerical failure, 3 failed
verification.

When ``--output`` is omitted, output goes to stdout, or to
``$SOLENOID_SCATTER_OUTDIR/<subcommand>.<ext>`` when that variable is set.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

from . import __version__
from ._backend import BACKEND
from .classical import classical_curve, classical_singularities, make_angle_grid
from .climit import classical_counterpart, fit_loglog, fit_loglog_slope, geometric_lambdas, scaling_scan
from .errors import DomainError, NumericalError
from .quantum import QuantumSetup, quantum_curve
from .trajectory import arc_deflection, compare_histogram, monte_carlo_dcs, rk4_deflection

OUTDIR_ENV = "SOLENOID_SCATTER_OUTDIR"
EXIT_OK, EXIT_DOMAIN, EXIT_NUMERICAL, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the validation exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _fmt(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


class Table:
    def __init__(self, command, params, columns, rows):
        self.command = command
        self.params = params
        self.columns = list(columns)
        self.rows = [tuple(r) for r in rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        echo = " ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        buf.write(f"# solenoid-scatter {self.command} {echo}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_fmt(v) for v in r])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"command": self.command, "params": self.params, "columns": self.columns,
               "rows": [list(r) for r in self.rows]}
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


def read_csv(text: str):
    """Parse CSV produced by this tool into (header, columns, rows of floats)."""
    lines = text.splitlines()
    header = lines[0]
    reader = csv.reader(lines[1:])
    columns = next(reader)
    rows = [tuple(float(v) for v in r) for r in reader]
    return header, columns, rows


# output plumbing --------------------------------------------------------------

def _target(path, command, ext):
    if path:
        return Path(path)
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir:
        return Path(outdir) / f"{command}.{ext}"
    return None


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _emit_table(args, table):
    _emit(table.render(args.format), _target(args.output, args.command, args.format))


def _emit_summary(args, doc):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    path = _target(args.json, f"{args.command}.summary", "json")
    if path is None:
        sys.stderr.write(text)
    else:
        _emit(text, path)


# subcommands ------------------------------------------------------------------

def _cmd_classical(args):
    grid = make_angle_grid(args.theta_min, args.theta_max, args.n,
                           singularities=classical_singularities(args.rho_l, args.field_sign),
                           exclusion_eps=args.exclusion_eps)
    curve = classical_curve(args.rho_l, grid, args.field_sign)
    params = {"rho_l": args.rho_l, "theta_min": args.theta_min, "theta_max": args.theta_max,
              "n": args.n, "field_sign": args.field_sign, "exclusion_eps": args.exclusion_eps}
    rows = zip(curve.grid.thetas.tolist(), curve.values.tolist())
    _emit_table(args, Table(args.command, params, ("theta", "dcs"), rows))


def _cmd_quantum(args):
    setup = QuantumSetup(args.s_p, args.s_phi, args.forward_eps)
    grid = make_angle_grid(args.theta_min, args.theta_max, args.n,
                           singularities=(0.0,), exclusion_eps=args.forward_eps)
    kind = "ab" if args.command == "ab-dcs" else "quantum"
    curve = quantum_curve(setup, grid, kind)
    params = {"s_p": args.s_p, "s_phi": args.s_phi, "theta_min": args.theta_min,
              "theta_max": args.theta_max, "n": args.n, "forward_eps": args.forward_eps}
    rows = zip(curve.grid.thetas.tolist(), curve.values.tolist())
    _emit_table(args, Table(args.command, params, ("theta", "dcs"), rows))


def _cmd_trajectory(args):
    if args.method == "rk4":
        record = max(1, int(2.0 * math.pi / args.step / 2000))
        traj = rk4_deflection(args.rho_l, args.b, args.step, record_every=record)
    else:
        traj = arc_deflection(args.rho_l, args.b)
    params = {"rho_l": args.rho_l, "b": args.b, "method": args.method, "step": args.step}
    _emit_table(args, Table(args.command, params, ("x", "y"), traj.polyline()))
    _emit_summary(args, {"params": params, **traj.summary()})


def _cmd_oracle(args):
    hist = monte_carlo_dcs(args.rho_l, args.samples, args.bins, args.seed, workers=args.workers)
    params = {"rho_l": args.rho_l, "samples": args.samples, "bins": args.bins, "seed": args.seed,
              "rng": hist.rng_algorithm, "backend": hist.backend}
    _emit_table(args, Table(args.command, params, ("theta_lo", "theta_hi", "count", "dcs"), hist.rows()))


def _cmd_compare(args):
    hist = monte_carlo_dcs(args.rho_l, args.samples, args.bins, args.seed, workers=args.workers)
    rep = compare_histogram(hist)
    params = {"rho_l": args.rho_l, "samples": args.samples, "bins": args.bins, "seed": args.seed,
              "rng": hist.rng_algorithm, "backend": hist.backend}
    cols = ("theta_lo", "theta_hi", "analytic", "mc", "count", "expected", "sigma_deviation")
    rows = [(b.theta_lo, b.theta_hi, b.analytic, b.mc, b.count, b.expected, b.sigma_deviation)
            for b in rep.bins]
    _emit_table(args, Table(args.command, params, cols, rows))
    _emit_summary(args, {"params": params, **rep.summary()})


def _cmd_scan(args):
    lambdas = geometric_lambdas(args.decades, args.points_per_decade)
    scan = scaling_scan(args.rho_l, args.theta, args.s_p_base, lambdas,
                        workers=args.workers, method=args.envelope)
    fit = fit_loglog_slope(scan)
    cfit = fit_loglog(scan.lambdas, classical_counterpart(scan))
    params = {"rho_l": args.rho_l, "theta": args.theta, "s_p_base": args.s_p_base,
              "decades": args.decades, "points_per_decade": args.points_per_decade,
              "envelope": args.envelope}
    _emit_table(args, Table(args.command, params, ("lambda", "s_p", "s_phi", "envelope"), scan.rows()))
    _emit_summary(args, {"params": params, "fit": fit.summary(), "expected_slope": -2.0,
                         "classical_slope": cfit.slope})


def _cmd_verify(args):
    from .verification import run_all

    report = run_all(args.suite or None)
    text = json.dumps(report, indent=2) + "\n"
    _emit(text, _target(args.output, args.command, "json"))
    return EXIT_OK if report["passed"] else EXIT_VERIFY


# parser -----------------------------------------------------------------------

def _positive_int(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _common(p, tabular=True):
    if tabular:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", default=None, help="output file (default: stdout or $%s)" % OUTDIR_ENV)


def _angle_grid_args(p, lo, hi, n):
    p.add_argument("--theta-min", type=float, default=lo)
    p.add_argument("--theta-max", type=float, default=hi)
    p.add_argument("--n", type=_positive_int, default=n)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="solenoid-scatter", description="Classical and Born scattering off a finite solenoid.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classical-dcs", help="classical DCS curve")
    p.add_argument("--rho-l", type=float, required=True)
    _angle_grid_args(p, -3.1, 3.1, 256)
    p.add_argument("--field-sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--exclusion-eps", type=float, default=1e-6)
    _common(p)
    p.set_defaults(func=_cmd_classical)

    for name, helptext in (("quantum-dcs", "first-order Born DCS curve"), ("ab-dcs", "Aharonov-Bohm DCS curve")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--s-p", type=float, required=True)
        p.add_argument("--s-phi", type=float, required=True)
        _angle_grid_args(p, 0.01, math.pi, 256)
        p.add_argument("--forward-eps", type=float, default=1e-3)
        _common(p)
        p.set_defaults(func=_cmd_quantum)

    p = sub.add_parser("trajectory", help="single orbit: path CSV and deflection summary")
    p.add_argument("--rho-l", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--method", choices=("arc", "rk4"), default="arc")
    p.add_argument("--step", type=float, default=1e-4)
    p.add_argument("--json", default=None, help="summary JSON path (default: stderr)")
    _common(p)
    p.set_defaults(func=_cmd_trajectory)

    for name, func, helptext in (("oracle-dcs", _cmd_oracle, "Monte Carlo DCS histogram"),
                                 ("compare-classical", _cmd_compare, "Monte Carlo vs classical DCS")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--rho-l", type=float, required=True)
        p.add_argument("--samples", type=_positive_int, default=10_000_000)
        p.add_argument("--bins", type=_positive_int, default=128)
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--workers", type=_positive_int, default=1)
        if name == "compare-classical":
            p.add_argument("--json", default=None, help="pass/fail JSON path (default: stderr)")
        _common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("scaling-scan", help="envelope scan along the classical limit")
    p.add_argument("--rho-l", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--s-p-base", type=float, default=100.0)
    p.add_argument("--decades", type=float, default=4)
    p.add_argument("--points-per-decade", type=_positive_int, default=2)
    p.add_argument("--envelope", choices=("interp", "max"), default="interp")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--json", default=None, help="fit JSON path (default: stderr)")
    _common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--suite", action="append", choices=("classical", "trajectory", "quantum", "climit", "bessel"))
    _common(p, tabular=False)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except DomainError as exc:
        print(f"solenoid-scatter: invalid input: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        extra = "" if exc.estimate is None else f" (last estimate {exc.estimate!r})"
        print(f"solenoid-scatter: numerical failure: {exc}{extra}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
