"""Entanglement curves, boundary-curve sweeps, and averages over the input family.

Every sweep is deterministic: grids are evaluated sequentially and rows are
emitted sorted ascending by their input coordinates.  Degenerate shrink
pairs are computed like any other point but tagged, so downstream plotting
can drop or mark them; excluded region points carry None instead of a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .cloners import (
    ConstraintViolatedError,
    ShrinkParams,
    acm_boundary_s2,
    acm_clone,
    acm_constraint_satisfied,
    scm_clone,
    wzcm_family_clone,
)
from .entanglement import concurrence
from .states import density_of, psi_minus_family

#: default absolute tolerance of the adaptive quadrature.
QUAD_DEFAULT_TOL = 1e-7
#: recursion depth cap of the adaptive quadrature.
QUAD_MAX_DEPTH = 30
#: tolerances tighter than this are rejected as unreachable in float64.
QUAD_MIN_TOL = 1e-10
#: default number of grid points for figure sweeps.
GRID_POINTS_DEFAULT = 201

MACHINES = ("wzcm", "scm", "acm")


class QuadratureConvergenceError(RuntimeError):
    """Raised when adaptive refinement hits the depth cap before converging."""


@dataclass(frozen=True)
class QuadratureResult:
    """Value, a-posteriori error estimate and evaluation count of an integral."""

    value: float
    abs_error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class SweepSeries:
    """A table of sweep results.

    ``rows`` holds (inputs, outputs) tuple pairs; ``axis_names`` names the
    flattened columns, inputs first.  Rows are sorted ascending by inputs
    and input tuples are unique.  Output entries are floats, None for
    points excluded from the allowed region, or booleans for flags.
    """

    axis_names: tuple[str, ...]
    rows: tuple[tuple[tuple, tuple], ...]
    machine_tag: str

    def __post_init__(self):
        inputs = [r[0] for r in self.rows]
        for a, b in zip(inputs, inputs[1:]):
            if b < a:
                raise ValueError("rows must be sorted ascending by inputs")
        if len(set(inputs)) != len(inputs):
            raise ValueError("duplicate input tuples in sweep rows")

    def iter_flat(self) -> Iterable[tuple]:
        """Rows as flat tuples aligned with axis_names."""
        for inputs, outputs in self.rows:
            yield inputs + outputs


def uniform_grid(n: int) -> np.ndarray:
    """n evenly spaced points covering [0, 1] inclusive."""
    if n < 2:
        raise ValueError(f"grid needs at least 2 points, got {n}")
    return np.linspace(0.0, 1.0, n)


def integrate_adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = QUAD_DEFAULT_TOL,
    *,
    max_depth: int = QUAD_MAX_DEPTH,
    label: str = "integral",
) -> QuadratureResult:
    """Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.

    Interval acceptance uses the standard |S2 - S1| <= 15 tol test plus the
    S2 + (S2-S1)/15 correction; the first two refinement levels are always
    taken so a symmetric integrand cannot fake convergence on the top
    interval.  Raises QuadratureConvergenceError past ``max_depth`` levels.
    """
    if tol < QUAD_MIN_TOL:
        raise ValueError(f"tolerance {tol!r} below the {QUAD_MIN_TOL:g} floor")
    evals = 0

    def feval(x: float) -> float:
        nonlocal evals
        evals += 1
        return f(x)

    def refine(x0, f0, x2, f2, x4, f4, whole, tol, depth):
        x1 = 0.5 * (x0 + x2)
        x3 = 0.5 * (x2 + x4)
        f1 = feval(x1)
        f3 = feval(x3)
        left = (x2 - x0) * (f0 + 4.0 * f1 + f2) / 6.0
        right = (x4 - x2) * (f2 + 4.0 * f3 + f4) / 6.0
        delta = left + right - whole
        if depth >= 2 and abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0, abs(delta) / 15.0
        if depth >= max_depth:
            raise QuadratureConvergenceError(
                f"{label}: no convergence on [{x0:g}, {x4:g}] at depth {max_depth}"
            )
        lv, le = refine(x0, f0, x1, f1, x2, f2, left, 0.5 * tol, depth + 1)
        rv, re = refine(x2, f2, x3, f3, x4, f4, right, 0.5 * tol, depth + 1)
        return lv + rv, le + re

    fa = feval(a)
    fb = feval(b)
    mid = 0.5 * (a + b)
    fm = feval(mid)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    value, err = refine(a, fa, mid, fm, b, fb, whole, tol, 0)
    return QuadratureResult(value=value, abs_error_estimate=err, evaluations=evals)


def _eof_wzcm(alpha: float) -> float:
    return concurrence(wzcm_family_clone(alpha)).eof


def _eof_scm(alpha: float, count: int = 2) -> float:
    return concurrence(scm_clone(psi_minus_family(alpha), count)).eof


def _eof_acm(alpha: float, s: float) -> float:
    return concurrence(acm_clone(psi_minus_family(alpha), s)).eof


def _eof_input(alpha: float) -> float:
    return concurrence(density_of(psi_minus_family(alpha))).eof


def avg_entanglement_acm(alpha: float, params: ShrinkParams) -> float:
    """Mean entanglement of formation of the two asymmetric-cloner copies.

    Raises ConstraintViolatedError outside the allowed (s1, s2) region;
    the degenerate endpoints are allowed and simply evaluated.
    """
    if not acm_constraint_satisfied(params):
        raise ConstraintViolatedError(
            f"(s1, s2) = ({params.s1!r}, {params.s2!r}) violates the region "
            f"constraint by {params.constraint_value()!r}"
        )
    return 0.5 * (_eof_acm(alpha, params.s1) + _eof_acm(alpha, params.s2))


def entanglement_curve(
    machine: str,
    grid: Sequence[float],
    params: ShrinkParams | None = None,
) -> SweepSeries:
    """Per-alpha entanglement of formation of one clone along a grid.

    ``machine`` is "wzcm", "scm" (two copies) or "acm"; the asymmetric
    machine needs ``params`` and reports the two-copy average.
    """
    if machine not in MACHINES:
        raise ValueError(f"machine must be one of {MACHINES}, got {machine!r}")
    alphas = np.unique(np.asarray(grid, dtype=float))
    if alphas.size == 0:
        raise ValueError("empty alpha grid")
    if alphas[0] < 0.0 or alphas[-1] > 1.0:
        raise ValueError("alpha grid must stay inside [0, 1]")
    if machine == "acm":
        if params is None:
            raise ValueError("the asymmetric machine needs shrink parameters")
        values = [avg_entanglement_acm(float(a), params) for a in alphas]
    elif machine == "wzcm":
        values = [_eof_wzcm(float(a)) for a in alphas]
    else:
        values = [_eof_scm(float(a)) for a in alphas]
    rows = tuple(((float(a),), (v,)) for a, v in zip(alphas, values))
    return SweepSeries(axis_names=("alpha", "eof"), rows=rows, machine_tag=machine)


def mean_entanglement(machine: str, tol: float = QUAD_DEFAULT_TOL) -> QuadratureResult:
    """Entanglement of formation of one clone averaged over alpha in [0, 1]."""
    if machine == "wzcm":
        f = _eof_wzcm
    elif machine == "scm":
        f = _eof_scm
    else:
        raise ValueError(f"machine must be 'wzcm' or 'scm', got {machine!r}")
    return integrate_adaptive_simpson(
        f, 0.0, 1.0, tol, label=f"mean clone entanglement ({machine})"
    )


def mean_entanglement_acm(
    params: ShrinkParams, tol: float = QUAD_DEFAULT_TOL
) -> QuadratureResult:
    """Two-copy average entanglement of the asymmetric cloner, averaged over alpha."""
    if not acm_constraint_satisfied(params):
        raise ConstraintViolatedError(
            f"(s1, s2) = ({params.s1!r}, {params.s2!r}) violates the region constraint"
        )
    return integrate_adaptive_simpson(
        lambda a: avg_entanglement_acm(a, params),
        0.0,
        1.0,
        tol,
        label=f"mean clone entanglement (acm, s1={params.s1:g}, s2={params.s2:g})",
    )


def acm_curve_sweep(
    s1_grid: Sequence[float],
    branch: str = "upper",
    alpha: float | None = None,
    tol: float = QUAD_DEFAULT_TOL,
) -> SweepSeries:
    """Two-copy average entanglement along a boundary branch of the region.

    For each s1 in the grid, s2 is placed on the chosen boundary branch.
    With a fixed ``alpha`` the rows hold the per-alpha average; with
    ``alpha=None`` they hold the mean over alpha in [0, 1] computed to
    quadrature tolerance ``tol``.  Degenerate endpoints are tagged.
    """
    s1s = np.unique(np.asarray(s1_grid, dtype=float))
    if s1s.size == 0:
        raise ValueError("empty s1 grid")
    if s1s[0] < 0.0 or s1s[-1] > 1.0:
        raise ValueError("s1 grid must stay inside [0, 1]")
    rows = []
    for s1 in s1s.tolist():
        s2 = acm_boundary_s2(s1, branch)
        params = ShrinkParams(s1, min(max(s2, 0.0), 1.0))
        if alpha is None:
            value = mean_entanglement_acm(params, tol).value
        else:
            value = avg_entanglement_acm(alpha, params)
        rows.append(((s1,), (params.s2, value, params.is_degenerate())))
    name = "mean_eof" if alpha is None else "avg_eof"
    return SweepSeries(
        axis_names=("s1", "s2", name, "degenerate"),
        rows=tuple(rows),
        machine_tag="acm",
    )


def scm_multiclone_entanglement(alpha: float, counts: Sequence[int]) -> SweepSeries:
    """Concurrence and entanglement of one symmetric clone per copy count."""
    ms = sorted(set(int(m) for m in counts))
    state = psi_minus_family(alpha)
    rows = []
    for m in ms:
        report = concurrence(scm_clone(state, m))
        rows.append(((m,), (report.concurrence, report.eof)))
    return SweepSeries(
        axis_names=("clones", "concurrence", "eof"),
        rows=tuple(rows),
        machine_tag="scm",
    )


def acm_region_grid(resolution: int, alpha: float) -> SweepSeries:
    """Two-copy average entanglement over an (s1, s2) grid of the unit square.

    Points outside the allowed region carry None; degenerate endpoints are
    evaluated but tagged.
    """
    grid = uniform_grid(resolution)
    rows = []
    for s1 in grid.tolist():
        for s2 in grid.tolist():
            params = ShrinkParams(s1, s2)
            if acm_constraint_satisfied(params):
                value = avg_entanglement_acm(alpha, params)
            else:
                value = None
            rows.append(((s1, s2), (value, params.is_degenerate())))
    return SweepSeries(
        axis_names=("s1", "s2", "avg_eof", "degenerate"),
        rows=tuple(rows),
        machine_tag="acm",
    )


def acm_alpha_surface(
    alpha_grid: Sequence[float],
    s1_grid: Sequence[float],
    branch: str = "upper",
) -> SweepSeries:
    """Two-copy average entanglement over (alpha, s1) with s2 on a boundary branch."""
    alphas = np.unique(np.asarray(alpha_grid, dtype=float))
    s1s = np.unique(np.asarray(s1_grid, dtype=float))
    if alphas.size == 0 or s1s.size == 0:
        raise ValueError("empty grid")
    if alphas[0] < 0.0 or alphas[-1] > 1.0 or s1s[0] < 0.0 or s1s[-1] > 1.0:
        raise ValueError("grids must stay inside [0, 1]")
    boundary = [
        (s1, ShrinkParams(s1, min(max(acm_boundary_s2(s1, branch), 0.0), 1.0)))
        for s1 in s1s.tolist()
    ]
    rows = []
    for a in alphas.tolist():
        for s1, params in boundary:
            value = avg_entanglement_acm(a, params)
            rows.append(((a, s1), (params.s2, value, params.is_degenerate())))
    return SweepSeries(
        axis_names=("alpha", "s1", "s2", "avg_eof", "degenerate"),
        rows=tuple(rows),
        machine_tag="acm",
    )
