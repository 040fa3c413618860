"""Command-line interface emitting deterministic CSV data series.

Output format, shared by every command: zero or more `# key: value` comment
lines recording the exact configuration, one header row naming the columns,
then data rows.  Fields are comma-separated, floats carry 9 significant
digits, line endings are Unix.  Identical flags produce identical bytes.

Exit codes: 0 on success, 1 when a quadrature fails to converge (the
diagnostic names the failing integral), 2 on flag validation errors.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import analysis, cloners, entanglement, states

PROG = "qclone"

_SINGLET_ALPHA = 1.0 / math.sqrt(2.0)


def _fmt(value) -> str:
    if value is None:
        return "outside_region"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".9g")


def _render(command: str, config: list[tuple[str, object]], header: list[str], rows) -> str:
    lines = [f"# command: {command}"]
    for key, value in config:
        lines.append(f"# {key}: {value!r}" if isinstance(value, float) else f"# {key}: {value}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


class _UsageError(Exception):
    pass


def _machine_inputs(args) -> tuple:
    """Validate the machine/parameter flag combination for clone/entangle."""
    if args.machine == "wzcm":
        if args.clones is not None:
            raise _UsageError("--clones only applies to --machine scm")
        if args.s1 is not None:
            raise _UsageError("--s1 only applies to --machine acm")
        return ("wzcm", None)
    if args.machine == "scm":
        if args.s1 is not None:
            raise _UsageError("--s1 only applies to --machine acm")
        count = 2 if args.clones is None else args.clones
        if count < 2:
            raise _UsageError("--clones must be at least 2")
        return ("scm", count)
    if args.clones is not None:
        raise _UsageError("--clones only applies to --machine scm")
    if args.s1 is None:
        raise _UsageError("--machine acm needs --s1")
    _check_unit("--s1", args.s1)
    return ("acm", args.s1)


def _check_unit(flag: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise _UsageError(f"{flag} must lie in [0, 1], got {value:g}")


def _check_grid(n: int) -> None:
    if n < 2:
        raise _UsageError("--grid-points must be at least 2")


def _check_tol(tol: float) -> None:
    if tol < analysis.QUAD_MIN_TOL:
        raise _UsageError(f"--quad-tol must be at least {analysis.QUAD_MIN_TOL:g}")


def _clone_matrix(args) -> np.ndarray:
    machine, param = _machine_inputs(args)
    _check_unit("--alpha", args.alpha)
    state = states.psi_minus_family(args.alpha)
    if machine == "wzcm":
        return cloners.wzcm_clone(states.to_bell_basis(state))
    if machine == "scm":
        return cloners.scm_clone(state, param)
    return cloners.acm_clone(state, param)


def _cmd_clone(args) -> str:
    rho = _clone_matrix(args)
    config = [("machine", args.machine), ("alpha", float(args.alpha))]
    if args.machine == "scm":
        config.append(("clones", 2 if args.clones is None else args.clones))
    if args.machine == "acm":
        config.append(("s1", float(args.s1)))
    rows = [(i, j, rho[i, j].real, rho[i, j].imag) for i in range(4) for j in range(4)]
    return _render("clone", config, ["row", "col", "re", "im"], rows)


def _cmd_entangle(args) -> str:
    rho = _clone_matrix(args)
    state = states.psi_minus_family(args.alpha)
    report = entanglement.concurrence(rho)
    fid = entanglement.fidelity(state, rho)
    config = [("machine", args.machine), ("alpha", float(args.alpha))]
    if args.machine == "scm":
        config.append(("clones", 2 if args.clones is None else args.clones))
    if args.machine == "acm":
        config.append(("s1", float(args.s1)))
    header = [
        "alpha",
        "concurrence",
        "eof",
        "lambda1",
        "lambda2",
        "lambda3",
        "lambda4",
        "fidelity",
    ]
    row = (args.alpha, report.concurrence, report.eof) + report.lambdas + (fid,)
    return _render("entangle", config, header, [row])


def _cmd_mean(args) -> str:
    _check_tol(args.quad_tol)
    config = [("machine", args.machine), ("quad_tol", float(args.quad_tol))]
    if args.machine == "acm":
        if args.s1 is None or args.s2 is None:
            raise _UsageError("--machine acm needs both --s1 and --s2")
        _check_unit("--s1", args.s1)
        _check_unit("--s2", args.s2)
        params = cloners.ShrinkParams(args.s1, args.s2)
        if not cloners.acm_constraint_satisfied(params):
            raise _UsageError(
                f"(s1, s2) = ({args.s1:g}, {args.s2:g}) lies outside the allowed region"
            )
        config.extend([("s1", float(args.s1)), ("s2", float(args.s2))])
        result = analysis.mean_entanglement_acm(params, args.quad_tol)
    else:
        if args.s1 is not None or args.s2 is not None:
            raise _UsageError("--s1/--s2 only apply to --machine acm")
        result = analysis.mean_entanglement(args.machine, args.quad_tol)
    header = ["value", "abs_error_estimate", "evaluations"]
    row = (result.value, result.abs_error_estimate, result.evaluations)
    return _render("mean", config, header, [row])


def _cmd_fig1(args) -> str:
    _check_grid(args.grid_points)
    grid = analysis.uniform_grid(args.grid_points)
    wz = analysis.entanglement_curve("wzcm", grid)
    sc = analysis.entanglement_curve("scm", grid)
    rows = [
        (a_row[0], a_row[1], b_row[1])
        for a_row, b_row in zip(wz.iter_flat(), sc.iter_flat())
    ]
    config = [("grid_points", args.grid_points)]
    return _render("fig1", config, ["alpha", "eof_wzcm", "eof_scm"], rows)


def _cmd_fig2(args) -> str:
    _check_grid(args.grid_points)
    _check_unit("--alpha", args.alpha)
    series = analysis.acm_region_grid(args.grid_points, args.alpha)
    config = [("alpha", float(args.alpha)), ("grid_points", args.grid_points)]
    return _render("fig2", config, list(series.axis_names), series.iter_flat())


def _cmd_fig3(args) -> str:
    _check_grid(args.grid_points)
    _check_unit("--alpha", args.alpha)
    grid = analysis.uniform_grid(args.grid_points)
    series = analysis.acm_curve_sweep(grid, args.branch, alpha=args.alpha)
    config = [
        ("alpha", float(args.alpha)),
        ("branch", args.branch),
        ("grid_points", args.grid_points),
    ]
    return _render("fig3", config, list(series.axis_names), series.iter_flat())


def _cmd_fig4(args) -> str:
    _check_grid(args.grid_points)
    grid = analysis.uniform_grid(args.grid_points)
    series = analysis.acm_alpha_surface(grid, grid, args.branch)
    config = [("branch", args.branch), ("grid_points", args.grid_points)]
    return _render("fig4", config, list(series.axis_names), series.iter_flat())


def _cmd_fig5(args) -> str:
    _check_grid(args.grid_points)
    _check_tol(args.quad_tol)
    grid = analysis.uniform_grid(args.grid_points)
    series = analysis.acm_curve_sweep(grid, args.branch, alpha=None, tol=args.quad_tol)
    mean_wz = analysis.mean_entanglement("wzcm", args.quad_tol).value
    mean_sc = analysis.mean_entanglement("scm", args.quad_tol).value
    rows = [
        (s1, s2, value, mean_wz, mean_sc, degenerate)
        for s1, s2, value, degenerate in series.iter_flat()
    ]
    header = ["s1", "s2", "mean_eof_acm", "mean_eof_wzcm", "mean_eof_scm", "degenerate"]
    config = [
        ("branch", args.branch),
        ("grid_points", args.grid_points),
        ("quad_tol", float(args.quad_tol)),
    ]
    return _render("fig5", config, header, rows)


_COMMANDS = {
    "fig1": _cmd_fig1,
    "fig2": _cmd_fig2,
    "fig3": _cmd_fig3,
    "fig4": _cmd_fig4,
    "fig5": _cmd_fig5,
    "clone": _cmd_clone,
    "entangle": _cmd_entangle,
    "mean": _cmd_mean,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Cloning-machine entanglement data series as CSV.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--output", metavar="PATH", help="write CSV here instead of stdout")
        return p

    p = add("fig1", "per-alpha clone entanglement, both symmetric machines")
    p.add_argument("--grid-points", type=int, default=analysis.GRID_POINTS_DEFAULT)

    p = add("fig2", "two-copy average entanglement over the (s1, s2) square")
    p.add_argument("--alpha", type=float, default=_SINGLET_ALPHA)
    p.add_argument("--grid-points", type=int, default=analysis.GRID_POINTS_DEFAULT)

    p = add("fig3", "two-copy average entanglement along a boundary branch")
    p.add_argument("--alpha", type=float, default=_SINGLET_ALPHA)
    p.add_argument("--branch", choices=cloners.BRANCHES, default="upper")
    p.add_argument("--grid-points", type=int, default=analysis.GRID_POINTS_DEFAULT)

    p = add("fig4", "boundary-branch average entanglement over (alpha, s1)")
    p.add_argument("--branch", choices=cloners.BRANCHES, default="upper")
    p.add_argument("--grid-points", type=int, default=analysis.GRID_POINTS_DEFAULT)

    p = add("fig5", "alpha-averaged entanglement along a boundary branch")
    p.add_argument("--branch", choices=cloners.BRANCHES, default="upper")
    p.add_argument("--grid-points", type=int, default=analysis.GRID_POINTS_DEFAULT)
    p.add_argument("--quad-tol", type=float, default=analysis.QUAD_DEFAULT_TOL)

    for name, help_text in (
        ("clone", "density matrix of a single clone"),
        ("entangle", "entanglement report for a single clone"),
    ):
        p = add(name, help_text)
        p.add_argument("--machine", choices=analysis.MACHINES, required=True)
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--clones", type=int, default=None)
        p.add_argument("--s1", type=float, default=None)

    p = add("mean", "clone entanglement averaged over the input family")
    p.add_argument("--machine", choices=analysis.MACHINES, required=True)
    p.add_argument("--s1", type=float, default=None)
    p.add_argument("--s2", type=float, default=None)
    p.add_argument("--quad-tol", type=float, default=analysis.QUAD_DEFAULT_TOL)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except analysis.QuadratureConvergenceError as exc:
        print(f"{PROG}: numeric failure: {exc}", file=sys.stderr)
        return 1
    _write(text, args.output)
    return 0


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
