"""Command-line front end: evaluate, verify, and export.

Subcommands:

  eval        sample one state's Wigner function on a box and write it
  verify      run the closed-form vs oracle comparison, write a report
  negativity  print the negativity volume of one state
  limits      run the reduction/limit checks
  scan-theta  tabulate W(0) and negativity volume across temperatures

Exit codes: 0 success, 1 numerical or verification failure (with a
machine-readable reason in the output), 2 usage error.  CSV floats are
printed with 17 significant digits so doubles round-trip exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__, analysis, closed_form
from .analysis import Box, Source
from .states import Family, StateSpec
from .thermo import (
    ThermalParams,
    params_from_mean_photons,
    params_from_temperature,
    params_from_theta,
)

_FAMILIES = [f.value for f in Family]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _add_state_arguments(parser: argparse.ArgumentParser, need_n: bool = True):
    parser.add_argument("--family", required=True, choices=_FAMILIES,
                        help="state family to evaluate")
    if need_n:
        parser.add_argument("--n", type=int, default=0,
                            help="photon subtraction/addition or excitation count")
    parser.add_argument("--theta", type=float, default=None,
                        help="thermal squeeze parameter")
    parser.add_argument("--nc", type=float, default=None,
                        help="mean thermal photon number")
    parser.add_argument("--omega", type=float, default=None,
                        help="mode frequency (hbar = 1); requires --kt")
    parser.add_argument("--kt", type=float, default=None,
                        help="temperature in energy units; requires --omega")


def _thermal_from_args(parser: argparse.ArgumentParser, args) -> ThermalParams:
    routes = [args.theta is not None, args.nc is not None,
              args.omega is not None or args.kt is not None]
    if sum(routes) != 1:
        parser.error("supply exactly one of --theta, --nc, or --omega with --kt")
    if args.theta is not None:
        return params_from_theta(args.theta)
    if args.nc is not None:
        return params_from_mean_photons(args.nc)
    if args.omega is None or args.kt is None:
        parser.error("--omega and --kt must be supplied together")
    return params_from_temperature(args.omega, args.kt)


def _state_from_args(parser, args) -> StateSpec:
    thermal = _thermal_from_args(parser, args)
    n = getattr(args, "n", 0)
    return StateSpec(Family(args.family), thermal, n=n)


def _config_echo(args) -> dict:
    skip = {"func"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w"), True


def write_grid_csv(grid: analysis.WignerGrid, fh):
    """q,p,w rows, row-major in q then p."""
    fh.write("q,p,w\n")
    q_axis = grid.q_axis
    p_axis = grid.p_axis
    for i, qv in enumerate(q_axis):
        for j, pv in enumerate(p_axis):
            fh.write(f"{_fmt(qv)},{_fmt(pv)},{_fmt(grid.values[i, j])}\n")


def write_grid_json(grid: analysis.WignerGrid, fh, config: dict):
    payload = {"version": __version__, "config": config, "grid": grid.to_dict()}
    json.dump(payload, fh, indent=2, sort_keys=True)
    fh.write("\n")


def write_report_json(reports, fh, config: dict, tolerances: dict | None = None):
    if isinstance(reports, analysis.VerificationReport):
        body = reports.to_dict()
    else:
        body = [r.to_dict() for r in reports]
    payload = {"version": __version__, "config": config, "report": body}
    if tolerances is not None:
        payload["tolerances"] = tolerances
    json.dump(payload, fh, indent=2, sort_keys=True)
    fh.write("\n")


def _write_failure(path, config: dict, exc: Exception):
    payload = {
        "version": __version__,
        "config": config,
        "error": type(exc).__name__,
        "message": str(exc),
    }
    try:
        fh, close = _open_out(path)
    except OSError:
        fh, close = sys.stderr, False
    try:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    finally:
        if close:
            fh.close()


# ---------------------------------------------------------------------------
# subcommands


def _check_grid_args(parser, args):
    res = getattr(args, "res", None)
    if res is not None and res < 2:
        parser.error("--res must be at least 2")
    box = getattr(args, "box", None)
    if box is not None and not (math.isfinite(box) and box > 0.0):
        parser.error("--box must be a positive finite half-width")


def _cmd_eval(parser, args) -> int:
    _check_grid_args(parser, args)
    state = _state_from_args(parser, args)
    box = Box.symmetric(args.box)
    grid = analysis.sample_grid(state, box, args.res, args.res, Source(args.source))
    fh, close = _open_out(args.out)
    try:
        if args.format == "csv":
            write_grid_csv(grid, fh)
        else:
            write_grid_json(grid, fh, _config_echo(args))
    finally:
        if close:
            fh.close()
    return 0


def _cmd_verify(parser, args) -> int:
    _check_grid_args(parser, args)
    state = _state_from_args(parser, args)
    box = Box.symmetric(args.box) if args.box is not None else None
    report = analysis.verify_state(
        state,
        box=box,
        nq=args.res,
        np_=args.res,
        max_err_tol=args.tol_max_err,
        norm_tol=args.tol_norm,
    )
    fh, close = _open_out(args.out)
    try:
        write_report_json(report, fh, _config_echo(args), tolerances=report.tolerances)
    finally:
        if close:
            fh.close()
    if args.out not in (None, "-"):
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {report.label} (max_abs_err={report.max_abs_err:.3e})")
    return 0 if report.passed else 1


def _cmd_negativity(parser, args) -> int:
    state = _state_from_args(parser, args)
    value = analysis.negativity_of_state(state, Source(args.source))
    print(_fmt(value))
    return 0


def _cmd_limits(parser, args) -> int:
    reports = analysis.limit_suite()
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status} {rep.label} (max_abs_err={rep.max_abs_err:.3e}, "
              f"tol={rep.tolerances['max_abs_err']:g})")
    if args.out is not None:
        fh, close = _open_out(args.out)
        try:
            write_report_json(reports, fh, _config_echo(args))
        finally:
            if close:
                fh.close()
    return 0 if all(r.passed for r in reports) else 1


def _cmd_scan_theta(parser, args) -> int:
    thetas = np.linspace(args.theta_min, args.theta_max, args.steps)
    rows = analysis.scan_theta(
        Family(args.family), args.n, thetas,
        include_negativity=not args.no_negativity,
    )
    fh, close = _open_out(args.out)
    try:
        columns = ["theta", "w0", "abs_w0"]
        if not args.no_negativity:
            columns.append("negativity_volume")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(row[c]) for c in columns) + "\n")
    finally:
        if close:
            fh.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermalwigner",
        description="Wigner functions of finite-temperature bosonic states",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="sample a Wigner function on a grid")
    _add_state_arguments(p_eval)
    p_eval.add_argument("--box", type=float, default=4.0,
                        help="half-width of the symmetric (q, p) box")
    p_eval.add_argument("--res", type=int, default=81, help="nodes per axis")
    p_eval.add_argument("--source", choices=[s.value for s in Source],
                        default=Source.CLOSED_FORM.value)
    p_eval.add_argument("--out", default=None, help="output path (default stdout)")
    p_eval.add_argument("--format", choices=["csv", "json"], default="csv")
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="closed form vs Fock oracle report")
    _add_state_arguments(p_verify)
    p_verify.add_argument("--box", type=float, default=None,
                          help="half-width override (default per family)")
    p_verify.add_argument("--res", type=int, default=None,
                          help="nodes per axis override (default per family)")
    p_verify.add_argument("--tol-max-err", type=float, default=None,
                          help="max pointwise error tolerance (default per family)")
    p_verify.add_argument("--tol-norm", type=float, default=analysis.NORM_TOL)
    p_verify.add_argument("--out", default=None, help="report path (default stdout)")
    p_verify.set_defaults(func=_cmd_verify)

    p_neg = sub.add_parser("negativity", help="print the negativity volume")
    _add_state_arguments(p_neg)
    p_neg.add_argument("--source", choices=[s.value for s in Source],
                       default=Source.CLOSED_FORM.value)
    p_neg.set_defaults(func=_cmd_negativity)

    p_limits = sub.add_parser("limits", help="run the reduction/limit checks")
    p_limits.add_argument("--out", default=None, help="optional JSON report path")
    p_limits.set_defaults(func=_cmd_limits)

    p_scan = sub.add_parser("scan-theta",
                            help="W(0) and negativity volume versus temperature")
    p_scan.add_argument("--family", required=True, choices=_FAMILIES)
    p_scan.add_argument("--n", type=int, default=0)
    p_scan.add_argument("--theta-min", type=float, default=0.1)
    p_scan.add_argument("--theta-max", type=float, default=2.0)
    p_scan.add_argument("--steps", type=int, default=20)
    p_scan.add_argument("--no-negativity", action="store_true",
                        help="skip the negativity column")
    p_scan.add_argument("--out", default=None, help="CSV path (default stdout)")
    p_scan.set_defaults(func=_cmd_scan_theta)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (analysis.BoxTooSmallError, closed_form.DegenerateStateError,
            ValueError, RuntimeError, OSError) as exc:
        _write_failure(getattr(args, "out", None), _config_echo(args), exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
