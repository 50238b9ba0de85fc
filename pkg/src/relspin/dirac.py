"""Chiral-basis gamma matrices, the bispinor representation, and spin operators.

gamma^0 is off-diagonal, gamma^5 = diag(I, -I); the bispinor representation of
a spinor map A is block diagonal diag(A, (A+)^-1), so gamma^5 is invariant and
gamma^0 intertwines the two chiralities (it represents space inversion).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .lorentz import PAULI, OnShellMomentum

_ZERO2 = np.zeros((2, 2), dtype=complex)
_I2 = np.eye(2, dtype=complex)

GAMMA0 = np.block([[_ZERO2, _I2], [_I2, _ZERO2]])
GAMMA1 = np.block([[_ZERO2, -PAULI[0]], [PAULI[0], _ZERO2]])
GAMMA2 = np.block([[_ZERO2, -PAULI[1]], [PAULI[1], _ZERO2]])
GAMMA3 = np.block([[_ZERO2, -PAULI[2]], [PAULI[2], _ZERO2]])
GAMMA5 = np.block([[_I2, _ZERO2], [_ZERO2, -_I2]])
GAMMAS = (GAMMA0, GAMMA1, GAMMA2, GAMMA3)

for _g in (*GAMMAS, GAMMA5):
    _g.flags.writeable = False


def gammas() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """The five constant matrices (gamma^0, gamma^1, gamma^2, gamma^3, gamma^5)."""
    return (*GAMMAS, GAMMA5)


def slash(v) -> np.ndarray:
    """Contraction v_mu gamma^mu from contravariant components of v."""
    v = np.asarray(v)
    return v[0] * GAMMA0 - v[1] * GAMMA1 - v[2] * GAMMA2 - v[3] * GAMMA3


def bispinor_rep(A: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Block-diagonal bispinor image diag(A, (A+)^-1) of a spinor map."""
    A = np.asarray(A, dtype=complex)
    det = np.linalg.det(A)
    if abs(det - 1.0) > tol:
        raise ValueError(f"spinor map must be unimodular, det = {det}")
    lower = np.linalg.inv(A.conj().T)
    return np.block([[A, _ZERO2], [_ZERO2, lower]])


def lorentz_generators() -> np.ndarray:
    """Generators (i/4)[gamma^mu, gamma^nu], returned as array gen[mu, nu]."""
    gen = np.zeros((4, 4, 4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            gen[mu, nu] = 0.25j * (GAMMAS[mu] @ GAMMAS[nu] - GAMMAS[nu] @ GAMMAS[mu])
    return gen


class PauliLubanskiOps(NamedTuple):
    """Pauli-Lubanski operators at a fixed on-shell momentum.

    w0 is the time component, w the stacked spatial components (3, 4, 4).
    """

    w0: np.ndarray
    w: np.ndarray


def _diag_block(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    return np.block([[upper, _ZERO2], [_ZERO2, lower]])


def pauli_lubanski(k: OnShellMomentum) -> PauliLubanskiOps:
    """Pauli-Lubanski operators with momentum operators replaced by k."""
    kv = k.spatial
    k0 = k.energy
    k_sigma = np.tensordot(kv, PAULI, axes=1)
    w0 = 0.5 * _diag_block(k_sigma, k_sigma)
    w = np.empty((3, 4, 4), dtype=complex)
    for i in range(3):
        # coefficients c_l with (k x sigma)_i = c_l sigma_l, i.e. c = e_i x k
        cross_sigma = np.tensordot(np.cross(np.eye(3)[i], kv), PAULI, axes=1)
        w[i] = 0.5 * k0 * _diag_block(PAULI[i], PAULI[i]) - 0.5j * _diag_block(
            cross_sigma, -cross_sigma
        )
    return PauliLubanskiOps(w0=w0, w=w)


def spin_matrix(n, k: OnShellMomentum) -> np.ndarray:
    """Spin projection operator n.S at momentum k; eigenvalues are +-1/2.

    Built from the Pauli-Lubanski operators as
    (1/m) (n.W - W^0 n.k / (k^0 + m)).
    """
    n = np.asarray(n, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > 1e-8:
        raise ValueError("direction must be a unit 3-vector")
    ops = pauli_lubanski(k)
    n_dot_w = np.einsum("i,iab->ab", n, ops.w)
    return (n_dot_w - ops.w0 * (n @ k.spatial) / (k.energy + k.mass)) / k.mass


def spin_spectrum(s: np.ndarray, tol: float = 1e-8) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (real, ascending) and eigenvectors of a spin matrix.

    The matrix is not Hermitian in the naive inner product, so a general
    solver is used and the imaginary parts are required to be negligible.
    """
    vals, vecs = np.linalg.eig(np.asarray(s, dtype=complex))
    if np.max(np.abs(vals.imag)) > tol:
        raise ValueError("spin matrix has non-real eigenvalues; malformed input")
    order = np.argsort(vals.real)
    return vals.real[order], vecs[:, order]
