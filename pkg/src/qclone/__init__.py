"""Quantum cloning machines for two-qubit states and their entanglement.

The package simulates three cloning machines acting on the psi-minus family
of partially entangled pairs: the extended Wootters-Zurek machine (wzcm),
the symmetric universal machine (scm, any number of copies) and the
asymmetric machine (acm, independent shrink factors for the two copies).
Clone quality is measured by concurrence and entanglement of formation;
figure-style sweeps and alpha averages live in :mod:`qclone.analysis`,
and the ``qclone`` console script emits them as CSV.
"""

from .analysis import (
    GRID_POINTS_DEFAULT,
    MACHINES,
    QUAD_DEFAULT_TOL,
    QuadratureConvergenceError,
    QuadratureResult,
    SweepSeries,
    acm_alpha_surface,
    acm_curve_sweep,
    acm_region_grid,
    avg_entanglement_acm,
    entanglement_curve,
    integrate_adaptive_simpson,
    mean_entanglement,
    mean_entanglement_acm,
    scm_multiclone_entanglement,
    uniform_grid,
)
from .cloners import (
    BRANCHES,
    ConstraintViolatedError,
    NegativeDiscriminantError,
    ShrinkParams,
    acm_boundary_s2,
    acm_clone,
    acm_clone_closed,
    acm_constraint_satisfied,
    scm_clone,
    scm_clone_closed,
    scm_shrink_factor,
    shrink_map,
    wzcm_clone,
    wzcm_clone_closed,
    wzcm_family_clone,
    wzcm_fidelity,
    wzcm_full_output,
)
from .entanglement import (
    EntanglementReport,
    NotXStateError,
    binary_entropy,
    concurrence,
    concurrence_xstate,
    eof_from_concurrence,
    fidelity,
    spin_flip,
)
from .qmath import (
    EigenResult,
    NotHermitianError,
    NotNormalizedError,
    NotPSDError,
    SUBSYSTEMS,
    adjoint,
    as_state_vector,
    hermitian_eigen,
    matrix_sqrt_psd,
    partial_trace,
)
from .states import (
    BASIS_ORDER,
    BELL_ORDER,
    assert_density_matrix,
    bell_family,
    bell_state,
    density_of,
    from_bell_basis,
    psi_minus_family,
    to_bell_basis,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS_ORDER",
    "BELL_ORDER",
    "BRANCHES",
    "ConstraintViolatedError",
    "EigenResult",
    "EntanglementReport",
    "GRID_POINTS_DEFAULT",
    "MACHINES",
    "NegativeDiscriminantError",
    "NotHermitianError",
    "NotNormalizedError",
    "NotPSDError",
    "NotXStateError",
    "QUAD_DEFAULT_TOL",
    "QuadratureConvergenceError",
    "QuadratureResult",
    "SUBSYSTEMS",
    "ShrinkParams",
    "SweepSeries",
    "acm_alpha_surface",
    "acm_boundary_s2",
    "acm_clone",
    "acm_clone_closed",
    "acm_constraint_satisfied",
    "acm_curve_sweep",
    "acm_region_grid",
    "adjoint",
    "as_state_vector",
    "assert_density_matrix",
    "avg_entanglement_acm",
    "bell_family",
    "bell_state",
    "binary_entropy",
    "concurrence",
    "concurrence_xstate",
    "density_of",
    "entanglement_curve",
    "eof_from_concurrence",
    "fidelity",
    "from_bell_basis",
    "hermitian_eigen",
    "integrate_adaptive_simpson",
    "matrix_sqrt_psd",
    "mean_entanglement",
    "mean_entanglement_acm",
    "partial_trace",
    "psi_minus_family",
    "scm_clone",
    "scm_clone_closed",
    "scm_multiclone_entanglement",
    "scm_shrink_factor",
    "shrink_map",
    "spin_flip",
    "to_bell_basis",
    "uniform_grid",
    "wzcm_clone",
    "wzcm_clone_closed",
    "wzcm_family_clone",
    "wzcm_fidelity",
    "wzcm_full_output",
    "__version__",
]
