"""Minkowski kinematics, SL(2,C) spinor maps, and Wigner rotations.

Conventions: metric diag(1, -1, -1, -1), natural units (hbar = c = 1),
four-vectors stored as length-4 arrays of contravariant components
(t, x, y, z).  All transformations here are proper orthochronous.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = np.stack([SIGMA1, SIGMA2, SIGMA3])


def minkowski_dot(u, v) -> float:
    """Minkowski product u^0 v^0 - u.v of two four-vectors."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(u[0] * v[0] - u[1:] @ v[1:])


@dataclass(frozen=True, eq=False)
class OnShellMomentum:
    """Four-momentum on the positive mass shell: k.k = m^2, k^0 >= m > 0.

    Only the mass and the spatial components are stored; the energy is
    always derived, so the on-shell constraint holds by construction.
    """

    mass: float
    spatial: np.ndarray

    def __post_init__(self):
        if not self.mass > 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        spatial = np.asarray(self.spatial, dtype=float)
        if spatial.shape != (3,):
            raise ValueError("spatial momentum must be a 3-vector")
        object.__setattr__(self, "spatial", spatial)

    @property
    def energy(self) -> float:
        return float(np.sqrt(self.mass**2 + self.spatial @ self.spatial))

    @property
    def vec(self) -> np.ndarray:
        """Contravariant components (k^0, k^1, k^2, k^3)."""
        return np.concatenate(([self.energy], self.spatial))

    @classmethod
    def rest(cls, mass: float) -> "OnShellMomentum":
        return cls(mass, np.zeros(3))

    def transformed(self, lam: np.ndarray) -> "OnShellMomentum":
        """Momentum with spatial part of lam @ k; energy re-derived on shell."""
        return OnShellMomentum(self.mass, (lam @ self.vec)[1:])


def sl2_form(k) -> np.ndarray:
    """Hermitian 2x2 matrix k^mu sigma_mu associated with a four-vector."""
    k = np.asarray(k, dtype=float)
    return k[0] * SIGMA0 + k[1] * SIGMA1 + k[2] * SIGMA2 + k[3] * SIGMA3


def standard_boost(k: OnShellMomentum) -> np.ndarray:
    """Canonical rotation-free boost L_k with L_k (m, 0) = k and L_(m,0) = I."""
    m = k.mass
    kv = k.spatial
    k0 = k.energy
    lam = np.empty((4, 4))
    lam[0, 0] = k0 / m
    lam[0, 1:] = kv / m
    lam[1:, 0] = kv / m
    lam[1:, 1:] = np.eye(3) + np.outer(kv, kv) / (m * (k0 + m))
    return lam


def sl2c_boost(k: OnShellMomentum) -> np.ndarray:
    """Positive Hermitian SL(2,C) element projecting onto standard_boost(k)."""
    m = k.mass
    k0 = k.energy
    k_sigma = np.tensordot(k.spatial, PAULI, axes=1)
    return ((k0 + m) * SIGMA0 + k_sigma) / np.sqrt(2.0 * m * (k0 + m))


def lambda_of_sl2c(A: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Lorentz matrix of the SL(2,C) element A, from k' sigma = A (k sigma) A+.

    The map is 2:1 (A and -A give the same Lorentz matrix); the result is
    always proper orthochronous.
    """
    A = np.asarray(A, dtype=complex)
    det = np.linalg.det(A)
    if abs(det - 1.0) > tol:
        raise ValueError(f"spinor map must be unimodular, det = {det}")
    sigmas = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)
    lam = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            lam[mu, nu] = 0.5 * np.trace(sigmas[mu] @ A @ sigmas[nu] @ A.conj().T).real
    return lam


def lorentz_inverse(lam: np.ndarray) -> np.ndarray:
    """Inverse of a Lorentz matrix: g Lambda^T g."""
    return METRIC @ lam.T @ METRIC


def is_proper_orthochronous(lam: np.ndarray, tol: float = 1e-8) -> bool:
    lam = np.asarray(lam, dtype=float)
    if lam.shape != (4, 4):
        return False
    if np.max(np.abs(lam.T @ METRIC @ lam - METRIC)) > tol:
        return False
    return np.linalg.det(lam) > 0.0 and lam[0, 0] >= 1.0 - tol


def rotation4(rot: np.ndarray) -> np.ndarray:
    """Embed a 3x3 rotation as a Lorentz matrix fixing the time axis."""
    lam = np.eye(4)
    lam[1:, 1:] = rot
    return lam


def su2_of_rotation(rot: np.ndarray) -> np.ndarray:
    """SU(2) element whose adjoint action is the given 3x3 rotation.

    Uses Shepperd's quaternion extraction for stability near all angles.
    The overall sign is one of the two valid lifts.
    """
    r = np.asarray(rot, dtype=float)
    tr = r[0, 0] + r[1, 1] + r[2, 2]
    choices = [tr, r[0, 0], r[1, 1], r[2, 2]]
    case = int(np.argmax(choices))
    if case == 0:
        s = 2.0 * np.sqrt(1.0 + tr)
        q = np.array(
            [0.25 * s, (r[2, 1] - r[1, 2]) / s, (r[0, 2] - r[2, 0]) / s, (r[1, 0] - r[0, 1]) / s]
        )
    elif case == 1:
        s = 2.0 * np.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2])
        q = np.array(
            [(r[2, 1] - r[1, 2]) / s, 0.25 * s, (r[0, 1] + r[1, 0]) / s, (r[0, 2] + r[2, 0]) / s]
        )
    elif case == 2:
        s = 2.0 * np.sqrt(1.0 + r[1, 1] - r[0, 0] - r[2, 2])
        q = np.array(
            [(r[0, 2] - r[2, 0]) / s, (r[0, 1] + r[1, 0]) / s, 0.25 * s, (r[1, 2] + r[2, 1]) / s]
        )
    else:
        s = 2.0 * np.sqrt(1.0 + r[2, 2] - r[0, 0] - r[1, 1])
        q = np.array(
            [(r[1, 0] - r[0, 1]) / s, (r[0, 2] + r[2, 0]) / s, (r[1, 2] + r[2, 1]) / s, 0.25 * s]
        )
    q /= np.linalg.norm(q)
    return q[0] * SIGMA0 - 1.0j * (q[1] * SIGMA1 + q[2] * SIGMA2 + q[3] * SIGMA3)


def sl2c_of_lorentz(lam: np.ndarray) -> np.ndarray:
    """Spinor lift of a proper orthochronous Lorentz matrix.

    Decomposes lam = L_u . R with u = lam (1,0,0,0) and R a rotation, and
    lifts each factor.  The result is defined up to an overall sign.
    """
    u = lam @ np.array([1.0, 0.0, 0.0, 0.0])
    unit = OnShellMomentum(1.0, u[1:])
    rot = (lorentz_inverse(standard_boost(unit)) @ lam)[1:, 1:]
    return sl2c_boost(unit) @ su2_of_rotation(rot)


def _canonical_su2_sign(u: np.ndarray) -> np.ndarray:
    """Fix the projective sign: positive real trace, with a deterministic
    tie-break through the largest entry when the trace vanishes."""
    tr = np.trace(u)
    if abs(tr) > 1e-7:
        return u if tr.real > 0.0 else -u
    idx = np.unravel_index(np.argmax(np.abs(u)), u.shape)
    pivot = u[idx]
    if abs(pivot.real) > 1e-7:
        return u if pivot.real > 0.0 else -u
    return u if pivot.imag > 0.0 else -u


class WignerRotation(NamedTuple):
    """Momentum-dependent rotation mixing spin components under a boost."""

    so3: np.ndarray
    su2: np.ndarray


def wigner_rotation(lam: np.ndarray, k: OnShellMomentum) -> WignerRotation:
    """Rotation L_{lam k}^-1 lam L_k and its spin-1/2 image.

    The SU(2) part is computed from spinor lifts as A_{lam k}^-1 A A_k; its
    sign is projective and is canonicalized to a positive real trace.
    """
    kp = k.transformed(lam)
    r4 = lorentz_inverse(standard_boost(kp)) @ lam @ standard_boost(k)
    su2 = np.linalg.inv(sl2c_boost(kp)) @ sl2c_of_lorentz(lam) @ sl2c_boost(k)
    return WignerRotation(so3=r4[1:, 1:], su2=_canonical_su2_sign(su2))


# ---------------------------------------------------------------------------
# deterministic random elements for identity suites and property tests

def random_direction(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish SU(2) element from a uniformly sampled unit quaternion."""
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    return q[0] * SIGMA0 - 1.0j * (q[1] * SIGMA1 + q[2] * SIGMA2 + q[3] * SIGMA3)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    return lambda_of_sl2c(random_su2(rng))[1:, 1:]


def random_momentum(
    rng: np.random.Generator, mass: float = 1.0, max_rapidity: float = 3.0
) -> OnShellMomentum:
    """On-shell momentum with uniform direction and uniform rapidity."""
    chi = rng.uniform(0.0, max_rapidity)
    return OnShellMomentum(mass, mass * np.sinh(chi) * random_direction(rng))


def random_lorentz(rng: np.random.Generator, max_rapidity: float = 3.0) -> np.ndarray:
    """Proper orthochronous transformation: random rotation times random boost."""
    boost = standard_boost(random_momentum(rng, 1.0, max_rapidity))
    return rotation4(random_rotation(rng)) @ boost
