"""Entanglement of formation for two-qubit states via concurrence.

For a density matrix rho with spin-flipped partner
rho_tilde = (sigma_y x sigma_y) rho* (sigma_y x sigma_y), the concurrence is
C = max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
eigenvalues of rho * rho_tilde, and the entanglement of formation is

    E = h((1 + sqrt(1 - C^2)) / 2),    h(x) = -x log2 x - (1-x) log2 (1-x).

Instead of a non-Hermitian eigensolve of rho*rho_tilde, the l_i are taken
from the Hermitian product sqrt(rho) * rho_tilde * sqrt(rho), which has the
same spectrum but is guaranteed real and nonnegative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qmath import (
    EIG_ROUNDOFF_NEG,
    NotPSDError,
    as_state_vector,
    hermitian_eigen,
    matrix_sqrt_psd,
)

#: entries outside the diagonal and anti-diagonal must stay below this for
#: the closed-form X-state route to apply.
XSTATE_TOL = 1e-12
#: an expectation value of a Hermitian operator with imaginary part at or
#: above this is an internal error, not a warning.
IMAG_TOL = 1e-12
#: eigenvalues of the sandwiched Hermitian product below this floor are
#: matrix-product roundoff from rank deficiency, not physics; taking their
#: square roots would inject ~1e-8 junk into the l_i.
RANK_NOISE_FLOOR = 1e-13

#: sigma_y x sigma_y over the computational basis.
SIGMA_Y_PAIR = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ],
    dtype=np.complex128,
)

#: index pairs allowed to be nonzero in an X-shaped density matrix.
_X_PATTERN = {(0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)}


class NotXStateError(ValueError):
    """Raised when the X-state closed form is applied off-pattern."""


@dataclass(frozen=True)
class EntanglementReport:
    """Concurrence, entanglement of formation and the spectrum behind them.

    ``lambdas`` holds the four l_i in decreasing order; ``method`` records
    which route produced the numbers.
    """

    concurrence: float
    eof: float
    lambdas: tuple[float, float, float, float]
    method: str = "generic"


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy argument must lie in [0, 1], got {x!r}")
    e = 0.0
    if x > 0.0:
        e -= x * math.log2(x)
    if x < 1.0:
        e -= (1.0 - x) * math.log2(1.0 - x)
    return e


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation as a function of concurrence."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"concurrence must lie in [0, 1], got {c!r}")
    return binary_entropy((1.0 + math.sqrt(max(0.0, 1.0 - c * c))) / 2.0)


def spin_flip(rho) -> np.ndarray:
    """(sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    m = np.asarray(rho, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    return SIGMA_Y_PAIR @ m.conj() @ SIGMA_Y_PAIR


def concurrence(rho) -> EntanglementReport:
    """Concurrence and entanglement of formation of a two-qubit state.

    Forms H = sqrt(rho) * rho_tilde * sqrt(rho), takes its eigenvalues,
    zeroes those below RANK_NOISE_FLOOR, and reads the l_i off as square
    roots.  Eigenvalues below the PSD roundoff floor raise NotPSDError.
    """
    root = matrix_sqrt_psd(rho)
    h = root @ spin_flip(rho) @ root
    h = 0.5 * (h + h.conj().T)
    values, _ = hermitian_eigen(h)
    if values[-1] < -EIG_ROUNDOFF_NEG:
        raise NotPSDError(f"sandwiched product eigenvalue {values[-1]!r} below floor")
    lams = tuple(
        math.sqrt(v) if v > RANK_NOISE_FLOOR else 0.0 for v in values.tolist()
    )
    c = lams[0] - lams[1] - lams[2] - lams[3]
    c = min(max(c, 0.0), 1.0)
    return EntanglementReport(
        concurrence=c,
        eof=eof_from_concurrence(c),
        lambdas=lams,
        method="generic",
    )


def concurrence_xstate(rho) -> float:
    """Closed-form concurrence of an X-shaped density matrix.

    2 max(0, |rho_12| - sqrt(rho_00 rho_33), |rho_03| - sqrt(rho_11 rho_22))
    with indices over (|00>, |01>, |10>, |11>).  Raises NotXStateError when
    any off-pattern entry reaches XSTATE_TOL.
    """
    m = np.asarray(rho, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    for i in range(4):
        for j in range(4):
            if (i, j) not in _X_PATTERN and abs(m[i, j]) >= XSTATE_TOL:
                raise NotXStateError(f"entry ({i}, {j}) = {m[i, j]!r} breaks the X pattern")
    d = [max(float(m[i, i].real), 0.0) for i in range(4)]
    inner = abs(m[1, 2]) - math.sqrt(d[0] * d[3])
    outer = abs(m[0, 3]) - math.sqrt(d[1] * d[2])
    return 2.0 * max(0.0, inner, outer)


def fidelity(reference, rho) -> float:
    """<psi|rho|psi> for a normalized reference pure state, clamped to [0, 1]."""
    v = as_state_vector(reference, 4)
    m = np.asarray(rho, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    value = complex(np.vdot(v, m @ v))
    if abs(value.imag) >= IMAG_TOL:
        raise ArithmeticError(f"fidelity came out non-real: {value!r}")
    return min(max(value.real, 0.0), 1.0)
