"""Covariant reduced spin density matrices: construction, transformation,
decomposition, and entropy.

The central object is the 4x4 matrix Omega acting on bispinor labels.  It
transforms by conjugation D(A) Omega D(A)^-1, keeps unit trace, and encodes
the mean four-velocity, the mean Pauli-Lubanski vector, and the mean spin
tensor of the underlying state.  theta = Omega gamma^0 is the Hermitian
positive-semidefinite form used for the entropy.

Momentum distributions are finite weighted mixtures of sharp-momentum
states; the covariant matrix only reads momentum-diagonal data, so such
mixtures cover the construction exactly without distributional limits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import GAMMA5, GAMMAS, bispinor_rep, lorentz_generators, slash
from .lorentz import METRIC, OnShellMomentum

_I4 = np.eye(4, dtype=complex)
_GENERATORS = lorentz_generators()
_GAMMA0 = GAMMAS[0]


@dataclass(frozen=True, eq=False)
class SharpState:
    """Sharp-momentum particle with polarization given by a Bloch vector."""

    momentum: OnShellMomentum
    bloch: np.ndarray

    def __post_init__(self):
        bloch = np.asarray(self.bloch, dtype=float)
        if bloch.shape != (3,):
            raise ValueError("Bloch vector must have 3 components")
        if np.linalg.norm(bloch) > 1.0 + 1e-9:
            raise ValueError(f"Bloch vector norm {np.linalg.norm(bloch)} exceeds 1")
        object.__setattr__(self, "bloch", bloch)


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Finite mixture of sharp states with a shared mass.

    Weights must be positive and sum to one (within 1e-9); they are used
    as given, in fixed order, so outputs are bit-stable.
    """

    entries: tuple[tuple[float, SharpState], ...]

    def __post_init__(self):
        entries = tuple((float(w), s) for w, s in self.entries)
        if not entries:
            raise ValueError("ensemble must contain at least one state")
        if any(w <= 0.0 for w, _ in entries):
            raise ValueError("ensemble weights must be positive")
        total = sum(w for w, _ in entries)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"ensemble weights sum to {total}, expected 1")
        masses = {s.momentum.mass for _, s in entries}
        if max(masses) - min(masses) > 1e-12 * max(masses):
            raise ValueError("all ensemble states must share one mass")
        object.__setattr__(self, "entries", entries)

    @property
    def mass(self) -> float:
        return self.entries[0][1].momentum.mass


def mean_w(state: SharpState) -> np.ndarray:
    """Mean Pauli-Lubanski vector: the boost of (0, m xi/2) along the momentum."""
    q = state.momentum
    xi = state.bloch
    qv = q.spatial
    w0 = 0.5 * (qv @ xi)
    wv = 0.5 * (q.mass * xi + qv * (qv @ xi) / (q.energy + q.mass))
    return np.concatenate(([w0], wv))


def bloch_of(q: np.ndarray, w: np.ndarray, mass: float) -> np.ndarray:
    """Bloch vector recovered from a momentum/spin pair (inverse of mean_w)."""
    q = np.asarray(q, dtype=float)
    w = np.asarray(w, dtype=float)
    return (2.0 / mass) * (w[1:] - w[0] * q[1:] / (q[0] + mass))


def omega_sharp(state: SharpState) -> np.ndarray:
    """Covariant density matrix (1/4)(q.gamma/m + 1)(1 + 2 gamma^5 w.gamma/m)."""
    q = state.momentum
    w = mean_w(state)
    first = slash(q.vec) / q.mass + _I4
    second = _I4 + 2.0 * GAMMA5 @ slash(w) / q.mass
    return 0.25 * first @ second


def omega_of_ensemble(ensemble: Ensemble) -> np.ndarray:
    """Weighted sum of sharp-state matrices; linear in the mixture."""
    out = np.zeros((4, 4), dtype=complex)
    for weight, state in ensemble.entries:
        out += weight * omega_sharp(state)
    return out


@dataclass(frozen=True, eq=False)
class SpinDecomposition:
    """Coefficients of Omega on the 16-dimensional Dirac basis.

    u and w carry contravariant components (u = <P>/m, w = <W>); s holds
    the antisymmetric mean spin tensor with both indices down.
    """

    a: float
    b: float
    u: np.ndarray
    w: np.ndarray
    s: np.ndarray


def decompose(omega: np.ndarray, mass: float) -> SpinDecomposition:
    """Trace projections of Omega onto the Dirac basis."""
    omega = np.asarray(omega, dtype=complex)
    a = np.trace(omega).real
    b = np.trace(1j * omega @ GAMMA5).real
    u = np.array([np.trace(omega @ GAMMAS[mu]).real for mu in range(4)])
    w = 0.5 * mass * np.array([np.trace(omega @ GAMMAS[mu] @ GAMMA5).real for mu in range(4)])
    s_upper = np.einsum("mnab,ba->mn", _GENERATORS, omega).real
    s = METRIC @ s_upper @ METRIC
    return SpinDecomposition(a=a, b=b, u=u, w=w, s=s)


def reconstruct(dec: SpinDecomposition, mass: float) -> np.ndarray:
    """Rebuild Omega from its decomposition (exact inverse of decompose)."""
    tensor_part = np.einsum("mn,mnab->ab", dec.s, _GENERATORS)
    return 0.25 * (
        dec.a * _I4
        - 1j * dec.b * GAMMA5
        + slash(dec.u)
        + (2.0 / mass) * GAMMA5 @ slash(dec.w)
        + 2.0 * tensor_part
    )


def transform_omega(omega: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Lorentz action by bispinor conjugation D(A) Omega D(A)^-1."""
    rep = bispinor_rep(A)
    return rep @ omega @ np.linalg.inv(rep)


def theta_of(omega: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Hermitian form theta = Omega gamma^0; rejects non-Hermitian results."""
    theta = np.asarray(omega, dtype=complex) @ _GAMMA0
    if np.max(np.abs(theta - theta.conj().T)) > tol:
        raise ValueError("Omega gamma^0 is not Hermitian; invalid density matrix")
    return theta


def normalize_theta(theta: np.ndarray) -> np.ndarray:
    """Unit-trace version theta / Tr theta."""
    return theta / np.trace(theta).real


def entropy(theta_tilde: np.ndarray, tol: float = 1e-8) -> float:
    """Von Neumann entropy -sum(l ln l) of a unit-trace Hermitian PSD matrix.

    Eigenvalues in [-tol, 0) are clamped to zero (0 ln 0 = 0); anything
    more negative is rejected as non-physical.
    """
    theta_tilde = np.asarray(theta_tilde, dtype=complex)
    if np.max(np.abs(theta_tilde - theta_tilde.conj().T)) > tol:
        raise ValueError("entropy input must be Hermitian")
    vals = np.linalg.eigvalsh(theta_tilde)
    if vals.min() < -tol:
        raise ValueError(f"entropy input is not positive semidefinite: {vals.min()}")
    vals = np.clip(vals, 0.0, None)
    positive = vals[vals > 0.0]
    return float(-(positive * np.log(positive)).sum() + 0.0)


def sigma_average(omega: np.ndarray) -> np.ndarray:
    """Normalized mean spin: Tr(Omega gamma gamma^5 (1+gamma^0)) / 2 Tr(Omega (1+gamma^0)).

    Equals half the Bloch vector for a sharp state.
    """
    omega = np.asarray(omega, dtype=complex)
    weight = _I4 + _GAMMA0
    denom = 2.0 * np.trace(omega @ weight).real
    if abs(denom) < 1e-12:
        raise ValueError("degenerate spin average: Tr(Omega (1+gamma^0)) vanishes")
    return np.array(
        [np.trace(omega @ GAMMAS[i] @ GAMMA5 @ weight).real / denom for i in (1, 2, 3)]
    )
