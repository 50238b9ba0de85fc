"""Two-particle covariant density matrices and EPR-Bohm spin correlations.

The correlation between spin measurements along unit directions a and b on a
two-particle sharp-momentum state is computed three ways: from the trace
formula over the 4x4 bispinor kernels, from the explicit 16x16 two-particle
matrix, and (for the singlet) from the closed-form expression.  All exported
quantities are ratios of traces, so the state normalization and any overall
scale of the coefficient matrix drop out.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import GAMMA5, GAMMAS, spin_matrix
from .intertwiner import energy_projector
from .lorentz import SIGMA2, OnShellMomentum, minkowski_dot

_I4 = np.eye(4, dtype=complex)
_GAMMA0 = GAMMAS[0]


def singlet_coeffs() -> np.ndarray:
    """Coefficient matrix diag(sigma_2, sigma_2) of the covariant singlet.

    Antisymmetric, and invariant in form under the simultaneous bispinor
    action on both particles, so the state looks the same to all inertial
    observers; in the center-of-mass frame it is the ordinary spin singlet.
    """
    z = np.zeros((2, 2), dtype=complex)
    return np.block([[SIGMA2, z], [z, SIGMA2]])


@dataclass(frozen=True, eq=False)
class TwoParticleState:
    """Sharp-momentum pair (k, p) with bispinor coefficient matrix C."""

    k: OnShellMomentum
    p: OnShellMomentum
    coeffs: np.ndarray

    def __post_init__(self):
        if abs(self.k.mass - self.p.mass) > 1e-12 * self.k.mass:
            raise ValueError("both particles must share one mass")
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != (4, 4):
            raise ValueError("coefficient matrix must be 4x4")
        if np.max(np.abs(coeffs)) == 0.0:
            raise ValueError("coefficient matrix must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def singlet(cls, k: OnShellMomentum, p: OnShellMomentum) -> "TwoParticleState":
        return cls(k, p, singlet_coeffs())


def _spin_weight(n: np.ndarray) -> np.ndarray:
    """Observable kernel (n.gamma) gamma^5 (1 + gamma^0)."""
    n_gamma = n[0] * GAMMAS[1] + n[1] * GAMMAS[2] + n[2] * GAMMAS[3]
    return n_gamma @ GAMMA5 @ (_I4 + _GAMMA0)


def omega_two(state: TwoParticleState) -> np.ndarray:
    """Two-particle covariant density matrix as a 16x16 array.

    Row and column indices are the bispinor pairs (alpha beta) and
    (alpha' beta') in row-major order.  The overall scale is fixed so that
    Tr[Omega ((gamma^0+1) x (gamma^0+1))] = 4, its rest-frame singlet value;
    correlations are trace ratios and do not depend on this choice.
    """
    pk = energy_projector(state.k)
    pp = energy_projector(state.p)
    c = state.coeffs
    m1 = pk @ _GAMMA0 @ c.conj() @ _GAMMA0 @ pp.T
    m2 = pk.T @ c @ pp
    if np.max(np.abs(m2)) <= 1e-12 * np.max(np.abs(c)):
        raise ValueError("state is annihilated by the positive-energy projectors")
    omega = np.outer(m1.reshape(-1), m2.reshape(-1))
    weight = np.kron(_GAMMA0 + _I4, _GAMMA0 + _I4)
    norm = np.trace(omega @ weight)
    if not norm.real > 0.0:
        raise ValueError("degenerate state: normalization trace is not positive")
    return omega * (4.0 / norm)


def correlation_from_omega(omega: np.ndarray, a, b) -> float:
    """Spin correlation extracted from a 16x16 two-particle matrix."""
    a = _unit(a)
    b = _unit(b)
    weight = np.kron(_GAMMA0 + _I4, _GAMMA0 + _I4)
    num = np.trace(omega @ np.kron(_spin_weight(a), _spin_weight(b)))
    den = np.trace(omega @ weight)
    value = num / den
    return float(value.real)


def correlation_trace(state: TwoParticleState, a, b) -> float:
    """Correlation of the two spin projections from the trace formula.

    Both observables are normalized to eigenvalues +-1 (twice the spin
    projection), so the result lies in [-1, 1]; the rest-frame singlet
    gives exactly -a.b.
    """
    a = _unit(a)
    b = _unit(b)
    pk = energy_projector(state.k) @ _GAMMA0
    pp = energy_projector(state.p) @ _GAMMA0
    sa = spin_matrix(a, state.k)
    sb = spin_matrix(b, state.p)
    c = state.coeffs
    num = np.trace((sb @ pp) @ c.conj().T @ (sa @ pk).T @ c)
    den = np.trace(pp @ c.conj().T @ pk.T @ c)
    if abs(den) < 1e-14:
        raise ValueError("degenerate state: normalization trace vanishes")
    return float(4.0 * (num / den).real)


def correlation_closed(mass: float, k: OnShellMomentum, p: OnShellMomentum, a, b) -> float:
    """Closed-form singlet correlation.

    The denominator m^2 + k.p uses the Minkowski product of the two
    four-momenta; the trace formula fixes this reading.
    """
    a = _unit(a)
    b = _unit(b)
    kv, pv = k.spatial, p.spatial
    kp = minkowski_dot(k.vec, p.vec)
    inner = np.cross(a, b) + (
        (a @ kv) * np.cross(b, pv) - (b @ pv) * np.cross(a, kv)
    ) / ((k.energy + mass) * (p.energy + mass))
    return float(-(a @ b) + np.cross(kv, pv) @ inner / (mass**2 + kp))


def special_config_correlation(beta: float) -> float:
    """Correlation beta^2 / (2 - beta^2) of the perpendicular configurations.

    Applies when |k| = |p|, a is perpendicular to b, and the analyzer
    directions are respectively parallel (or perpendicular) to the momenta.
    """
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"speed must satisfy 0 <= beta < 1, got {beta}")
    return beta**2 / (2.0 - beta**2)


def named_configuration(
    name: str, beta: float, mass: float = 1.0
) -> tuple[TwoParticleState, np.ndarray, np.ndarray]:
    """Canonical frame for the two special configurations.

    Momenta are fixed perpendicular, k along x and p along y with equal
    magnitudes m beta / sqrt(1 - beta^2).  'parallel-spin' measures along
    the momenta (a = x, b = y); 'perpendicular-spin' measures across them
    (a = y, b = -x).  Both yield the correlation beta^2 / (2 - beta^2).
    """
    if not 0.0 <= beta < 1.0:
        raise ValueError(f"speed must satisfy 0 <= beta < 1, got {beta}")
    kappa = mass * beta / np.sqrt(1.0 - beta**2)
    k = OnShellMomentum(mass, np.array([kappa, 0.0, 0.0]))
    p = OnShellMomentum(mass, np.array([0.0, kappa, 0.0]))
    if name == "parallel-spin":
        a = np.array([1.0, 0.0, 0.0])
        b = np.array([0.0, 1.0, 0.0])
    elif name == "perpendicular-spin":
        a = np.array([0.0, 1.0, 0.0])
        b = np.array([-1.0, 0.0, 0.0])
    else:
        raise ValueError(f"unknown configuration {name!r}")
    return TwoParticleState.singlet(k, p), a, b


def _unit(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError("direction must be a 3-vector")
    if abs(np.linalg.norm(n) - 1.0) > 1e-8:
        raise ValueError("direction must be a unit vector")
    return n
