"""Classical relativistic spin-momentum dynamics in external EM fields.

The kinetic four-momentum q and the spin four-vector w evolve in proper time
under the coupled precession/trajectory equations, including the moment
force terms (quadratic in the moment strength zeta) and the gradient force
sourced by a linear magnetostatic field model.  Their slow-motion limit is
the Stern-Gerlach system for the momentum and the Bloch vector.

Fields are static: a uniform electric part, plus a magnetic part with an
optional constant gradient.  The integrator is fixed-step classical RK4 with
no constraint projection; invariant drift (q.q, q.w) is left observable so
integration quality can be judged from the output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .density import SharpState, bloch_of, mean_w
from .lorentz import METRIC, OnShellMomentum


def _build_eps4() -> np.ndarray:
    """Totally antisymmetric symbol with eps^{0123} = +1."""
    from itertools import permutations

    eps = np.zeros((4, 4, 4, 4))
    for perm in permutations(range(4)):
        sign = 1
        p = list(perm)
        for i in range(4):
            while p[i] != i:
                j = p[i]
                p[i], p[j] = p[j], p[i]
                sign = -sign
        eps[perm] = sign
    return eps


_EPS4 = _build_eps4()


@dataclass(frozen=True, eq=False)
class EMField:
    """Static field: uniform E, magnetic part B plus optional linear gradient.

    grad_b[i, j] holds dB_j/dx_i; a physical magnetostatic gradient must be
    symmetric (no current) and trace-free (no monopoles), which is enforced
    whenever it is nonzero.
    """

    e: np.ndarray = field(default_factory=lambda: np.zeros(3))
    b: np.ndarray = field(default_factory=lambda: np.zeros(3))
    grad_b: np.ndarray = field(default_factory=lambda: np.zeros((3, 3)))

    def __post_init__(self):
        e = np.asarray(self.e, dtype=float)
        b = np.asarray(self.b, dtype=float)
        grad = np.asarray(self.grad_b, dtype=float)
        if e.shape != (3,) or b.shape != (3,) or grad.shape != (3, 3):
            raise ValueError("field components must be 3-vectors, gradient 3x3")
        if np.max(np.abs(grad)) > 0.0:
            scale = np.max(np.abs(grad))
            if np.max(np.abs(grad - grad.T)) > 1e-9 * scale:
                raise ValueError("magnetic gradient must be symmetric (curl-free)")
            if abs(np.trace(grad)) > 1e-9 * scale:
                raise ValueError("magnetic gradient must be trace-free (div B = 0)")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "grad_b", grad)

    def b_at(self, x: np.ndarray) -> np.ndarray:
        """Magnetic field at position x under the linear model."""
        return self.b + np.asarray(x, dtype=float) @ self.grad_b


@dataclass(frozen=True)
class ParticleParams:
    """Mass, charge, and moment strength zeta = g e / 2m."""

    mass: float
    charge: float
    zeta: float

    def __post_init__(self):
        if not self.mass > 0.0:
            raise ValueError("mass must be positive")

    @classmethod
    def from_g(cls, mass: float, charge: float, g: float) -> "ParticleParams":
        return cls(mass=mass, charge=charge, zeta=g * charge / (2.0 * mass))


def field_tensor(e, b) -> np.ndarray:
    """Contravariant field tensor: F^{0i} = E_i, F^{ij} = -eps_{ijk} B_k."""
    e = np.asarray(e, dtype=float)
    b = np.asarray(b, dtype=float)
    f = np.zeros((4, 4))
    f[0, 1:] = e
    f[1:, 0] = -e
    f[1, 2], f[2, 1] = -b[2], b[2]
    f[2, 3], f[3, 2] = -b[0], b[0]
    f[3, 1], f[1, 3] = -b[1], b[1]
    return f


def dual_tensor(f: np.ndarray) -> np.ndarray:
    """Dual (1/2) eps^{abmn} F_{mn} with eps^{0123} = +1; double dual is -F."""
    f_lower = METRIC @ f @ METRIC
    return 0.5 * np.einsum("abmn,mn->ab", _EPS4, f_lower)


@dataclass(frozen=True, eq=False)
class SpinKinState:
    """Proper-time snapshot: position x, four-momentum q, spin vector w."""

    tau: float
    x: np.ndarray
    q: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", np.asarray(self.x, dtype=float))
        object.__setattr__(self, "q", np.asarray(self.q, dtype=float))
        object.__setattr__(self, "w", np.asarray(self.w, dtype=float))

    @classmethod
    def from_bloch(cls, momentum: OnShellMomentum, bloch, x=(0.0, 0.0, 0.0)) -> "SpinKinState":
        """Initial data with w built from a Bloch vector at the given momentum."""
        state = SharpState(momentum, np.asarray(bloch, dtype=float))
        return cls(tau=0.0, x=np.asarray(x, dtype=float), q=momentum.vec, w=mean_w(state))


def _rhs(x: np.ndarray, q: np.ndarray, w: np.ndarray, fld: EMField, par: ParticleParams):
    m = par.mass
    f_up = field_tensor(fld.e, fld.b_at(x))
    f_mixed = f_up @ METRIC
    f_lower = METRIC @ f_up @ METRIC
    fd_mixed = dual_tensor(f_up) @ METRIC

    s_scalar = w @ f_lower @ q
    moment = f_mixed @ w + q * (s_scalar / m**2)

    dq = (par.charge / m) * (f_mixed @ q) + (par.zeta**2 / m) * (fd_mixed @ moment)
    if np.max(np.abs(fld.grad_b)) > 0.0:
        grad_term = np.zeros(4)
        for i in range(3):
            dfd_mixed = dual_tensor(field_tensor(np.zeros(3), fld.grad_b[i])) @ METRIC
            grad_term += w[1 + i] * (dfd_mixed @ q)
        dq += (par.zeta / m**2) * grad_term
    dw = par.zeta * moment
    dx = q[1:] / m
    return dx, dq, dw


def bmt_rhs(state: SpinKinState, fld: EMField, par: ParticleParams):
    """Proper-time derivatives (dq/dtau, dw/dtau) at the state's position."""
    _, dq, dw = _rhs(state.x, state.q, state.w, fld, par)
    return dq, dw


class IntegrationError(RuntimeError):
    """Raised when the integration produces non-finite values."""

    def __init__(self, message: str, last_index: int, trajectory: "Trajectory"):
        super().__init__(message)
        self.last_index = last_index
        self.trajectory = trajectory


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled proper-time history with invariant monitors."""

    mass: float
    tau: np.ndarray
    x: np.ndarray
    q: np.ndarray
    w: np.ndarray

    @property
    def inv_qq(self) -> np.ndarray:
        """q.q - m^2 at each sample (zero for the exact flow in pure B)."""
        with np.errstate(over="ignore", invalid="ignore"):
            return self.q[:, 0] ** 2 - np.sum(self.q[:, 1:] ** 2, axis=1) - self.mass**2

    @property
    def inv_qw(self) -> np.ndarray:
        """q.w at each sample."""
        with np.errstate(over="ignore", invalid="ignore"):
            return self.q[:, 0] * self.w[:, 0] - np.sum(self.q[:, 1:] * self.w[:, 1:], axis=1)

    @property
    def inv_ww(self) -> np.ndarray:
        """w.w at each sample."""
        with np.errstate(over="ignore", invalid="ignore"):
            return self.w[:, 0] ** 2 - np.sum(self.w[:, 1:] ** 2, axis=1)

    def bloch(self) -> np.ndarray:
        """Bloch vector history, boosting w to the instantaneous rest frame."""
        return np.stack(
            [bloch_of(self.q[i], self.w[i], self.mass) for i in range(len(self.tau))]
        )


def integrate(
    state0: SpinKinState, fld: EMField, par: ParticleParams, dtau: float, steps: int
) -> Trajectory:
    """Fixed-step RK4 integration of (x, q, w) over steps * dtau.

    Raises IntegrationError with the partial trajectory if the state stops
    being finite; no constraint projection is applied, so invariant drift in
    the output reflects integrator error.
    """
    if dtau <= 0.0:
        raise ValueError("step size must be positive")
    if steps < 1:
        raise ValueError("need at least one step")
    y = np.concatenate([state0.x, state0.q, state0.w])
    out = np.empty((steps + 1, 11))
    out[0] = y
    taus = state0.tau + dtau * np.arange(steps + 1)

    def f(y):
        dx, dq, dw = _rhs(y[0:3], y[3:7], y[7:11], fld, par)
        return np.concatenate([dx, dq, dw])

    for n in range(steps):
        # overflow is detected explicitly below, so let it produce inf/nan
        with np.errstate(over="ignore", invalid="ignore"):
            k1 = f(y)
            k2 = f(y + 0.5 * dtau * k1)
            k3 = f(y + 0.5 * dtau * k2)
            k4 = f(y + dtau * k3)
            y = y + (dtau / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.isfinite(y).all():
            partial = Trajectory(
                mass=par.mass,
                tau=taus[: n + 1],
                x=out[: n + 1, 0:3],
                q=out[: n + 1, 3:7],
                w=out[: n + 1, 7:11],
            )
            raise IntegrationError(
                f"integration diverged at step {n + 1}; last good row {n}", n, partial
            )
        out[n + 1] = y
    return Trajectory(
        mass=par.mass, tau=taus, x=out[:, 0:3], q=out[:, 3:7], w=out[:, 7:11]
    )


def slow_motion_rhs(q, xi, fld: EMField, par: ParticleParams):
    """Stern-Gerlach limit: dq/dt = (e/m) q x B + (zeta/2) grad(xi.B),
    dxi/dt = zeta xi x B.  Requires a purely magnetic field."""
    if np.max(np.abs(fld.e)) > 0.0:
        raise ValueError("slow-motion limit requires a vanishing electric field")
    q = np.asarray(q, dtype=float)
    xi = np.asarray(xi, dtype=float)
    dq = (par.charge / par.mass) * np.cross(q, fld.b) + 0.5 * par.zeta * (fld.grad_b @ xi)
    dxi = par.zeta * np.cross(xi, fld.b)
    return dq, dxi


@dataclass(frozen=True, eq=False)
class SlowTrajectory:
    """Coordinate-time history of the slow-motion system."""

    t: np.ndarray
    q: np.ndarray
    xi: np.ndarray


def integrate_slow(
    q0, xi0, fld: EMField, par: ParticleParams, dt: float, steps: int
) -> SlowTrajectory:
    """Fixed-step RK4 for the slow-motion system."""
    if dt <= 0.0:
        raise ValueError("step size must be positive")
    if steps < 1:
        raise ValueError("need at least one step")
    y = np.concatenate([np.asarray(q0, dtype=float), np.asarray(xi0, dtype=float)])
    out = np.empty((steps + 1, 6))
    out[0] = y

    def f(y):
        dq, dxi = slow_motion_rhs(y[:3], y[3:], fld, par)
        return np.concatenate([dq, dxi])

    for n in range(steps):
        k1 = f(y)
        k2 = f(y + 0.5 * dt * k1)
        k3 = f(y + 0.5 * dt * k2)
        k4 = f(y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[n + 1] = y
    return SlowTrajectory(t=dt * np.arange(steps + 1), q=out[:, :3], xi=out[:, 3:])


@dataclass(frozen=True)
class LimitReport:
    """Full-vs-slow-motion comparison over one spin precession period."""

    beta: float
    period: float
    steps: int
    xi_deviation: float
    momentum_deviation: float


def limit_consistency(
    beta: float,
    b_mag: float = 1.0,
    mass: float = 1.0,
    charge: float = 1.0,
    g: float = 2.0,
    steps: int = 4096,
) -> LimitReport:
    """Integrate the full and slow-motion systems from matched initial data.

    Uniform field B along z, momentum and polarization along x.  In a
    uniform magnetic field q^0 is constant, so proper and coordinate time
    stay proportional and the two histories can be compared sample by
    sample.  The reported deviations shrink quadratically with beta.
    """
    if not 0.0 < beta <= 0.05:
        raise ValueError("slow-motion comparison expects 0 < beta <= 0.05")
    par = ParticleParams.from_g(mass, charge, g)
    fld = EMField(b=np.array([0.0, 0.0, b_mag]))
    period = 2.0 * np.pi / abs(par.zeta * b_mag)

    gamma = 1.0 / np.sqrt(1.0 - beta**2)
    q_spatial = np.array([gamma * mass * beta, 0.0, 0.0])
    xi0 = np.array([1.0, 0.0, 0.0])
    momentum = OnShellMomentum(mass, q_spatial)

    full = integrate(
        SpinKinState.from_bloch(momentum, xi0), fld, par, (period / gamma) / steps, steps
    )
    slow = integrate_slow(q_spatial, xi0, fld, par, period / steps, steps)

    xi_full = full.bloch()
    xi_dev = np.max(np.linalg.norm(xi_full - slow.xi, axis=1)) / np.linalg.norm(xi0)
    q_dev = np.max(np.linalg.norm(full.q[:, 1:] - slow.q, axis=1)) / np.linalg.norm(q_spatial)
    return LimitReport(
        beta=beta,
        period=period,
        steps=steps,
        xi_deviation=float(xi_dev),
        momentum_deviation=float(q_dev),
    )
