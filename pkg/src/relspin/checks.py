"""Seeded identity suites behind the `check` command.

Each suite draws deterministic random elements and returns the worst
max-abs residual it saw, so a run is summarized by one number per suite
and is reproducible for a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import density, dirac, epr, intertwiner, lorentz

DEFAULT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class SuiteResult:
    name: str
    residual: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.residual < self.tolerance


def check_clifford(perturb_gamma1: float = 0.0) -> float:
    """Anticommutators of the gamma matrices against the metric.

    perturb_gamma1 injects a fault into gamma^1 (harness sanity check only).
    """
    g = [m.copy() for m in dirac.gammas()[:4]]
    g[1][0, 0] += perturb_gamma1
    g5 = dirac.gammas()[4]
    resid = 0.0
    eye = np.eye(4)
    for mu in range(4):
        for nu in range(4):
            anti = g[mu] @ g[nu] + g[nu] @ g[mu]
            resid = max(resid, np.max(np.abs(anti - 2.0 * lorentz.METRIC[mu, nu] * eye)))
        resid = max(resid, np.max(np.abs(g[mu] @ g5 + g5 @ g[mu])))
    resid = max(resid, np.max(np.abs(g5 @ g5 - eye)))
    return float(resid)


def check_normalization(rng: np.random.Generator, samples: int, max_rapidity: float) -> float:
    """Normalization identities of the intertwiner over random momenta."""
    resid = 0.0
    eye2 = np.eye(2)
    eye4 = np.eye(4)
    for _ in range(samples):
        mass = rng.uniform(0.5, 2.0)
        k = lorentz.random_momentum(rng, mass, max_rapidity)
        v = intertwiner.v_of(k)
        vb = intertwiner.vbar(v)
        resid = max(resid, np.max(np.abs(vb @ v - eye2)))
        projector = (dirac.slash(k.vec) + mass * eye4) / (2.0 * mass)
        resid = max(resid, np.max(np.abs(v @ vb - projector)))
        for mu in range(4):
            expect = (k.vec[mu] / mass) * eye2
            resid = max(resid, np.max(np.abs(vb @ dirac.GAMMAS[mu] @ v - expect)))
    return float(resid)


def check_weinberg(rng: np.random.Generator, samples: int, max_rapidity: float) -> float:
    """Intertwining condition over random transformations and momenta."""
    resid = 0.0
    for _ in range(samples):
        mass = rng.uniform(0.5, 2.0)
        k = lorentz.random_momentum(rng, mass, max_rapidity)
        lam = lorentz.random_lorentz(rng, max_rapidity)
        resid = max(resid, intertwiner.weinberg_residual(lam, k))
    return float(resid)


def check_dirac_equation(rng: np.random.Generator, samples: int, max_rapidity: float) -> float:
    resid = 0.0
    for _ in range(samples):
        mass = rng.uniform(0.5, 2.0)
        k = lorentz.random_momentum(rng, mass, max_rapidity)
        resid = max(resid, intertwiner.dirac_residual(k))
    return float(resid)


def check_spin_spectrum(rng: np.random.Generator, samples: int, max_rapidity: float) -> float:
    """Eigenvalues +-1/2 (each twice) of spin projections at random momenta."""
    resid = 0.0
    target = np.array([-0.5, -0.5, 0.5, 0.5])
    for _ in range(samples):
        mass = rng.uniform(0.5, 2.0)
        k = lorentz.random_momentum(rng, mass, max_rapidity)
        n = lorentz.random_direction(rng)
        s = dirac.spin_matrix(n, k)
        vals = np.linalg.eigvals(s)
        resid = max(resid, np.max(np.abs(vals.imag)))
        resid = max(resid, np.max(np.abs(np.sort(vals.real) - target)))
    return float(resid)


def check_spin_commutators(rng: np.random.Generator, samples: int, max_rapidity: float) -> float:
    """su(2) commutation relations of the spin components at fixed momentum."""
    resid = 0.0
    for _ in range(samples):
        mass = rng.uniform(0.5, 2.0)
        k = lorentz.random_momentum(rng, mass, max_rapidity)
        s = [dirac.spin_matrix(np.eye(3)[i], k) for i in range(3)]
        for i, j, l in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            comm = s[i] @ s[j] - s[j] @ s[i]
            resid = max(resid, np.max(np.abs(comm - 1j * s[l])))
    return float(resid)


def check_covariance(rng: np.random.Generator, samples: int, max_rapidity: float) -> float:
    """Bispinor covariance: generators and the sharp-state density matrix.

    Targets here grow like gamma^2 when a boost acts on a fast momentum, so
    each residual is scaled by the target's magnitude (floored at 1); the
    O(1)-target suites stay absolute.
    """
    gen = dirac.lorentz_generators()
    resid = 0.0
    for _ in range(samples):
        lam = lorentz.random_lorentz(rng, max_rapidity)
        A = lorentz.sl2c_of_lorentz(lam)
        rep = dirac.bispinor_rep(A)
        rep_inv = np.linalg.inv(rep)
        transported = np.einsum("ma,nb,abij->mnij", lam, lam, gen)
        for mu in range(4):
            for nu in range(mu + 1, 4):
                lhs = rep_inv @ gen[mu, nu] @ rep
                scale = max(1.0, np.max(np.abs(transported[mu, nu])))
                resid = max(resid, np.max(np.abs(lhs - transported[mu, nu])) / scale)
        mass = rng.uniform(0.5, 2.0)
        q = lorentz.random_momentum(rng, mass, max_rapidity)
        xi = lorentz.random_direction(rng) * rng.uniform(0.0, 1.0)
        state = density.SharpState(q, xi)
        rotated = lorentz.wigner_rotation(lam, q).so3 @ xi
        lhs = density.transform_omega(density.omega_sharp(state), A)
        rhs = density.omega_sharp(density.SharpState(q.transformed(lam), rotated))
        scale = max(1.0, np.max(np.abs(rhs)))
        resid = max(resid, np.max(np.abs(lhs - rhs)) / scale)
    return float(resid)


def check_correlation_oracle(rng: np.random.Generator, samples: int, max_rapidity: float) -> float:
    """Trace-formula vs closed-form singlet correlation at random kinematics."""
    resid = 0.0
    for _ in range(samples):
        mass = rng.uniform(0.5, 2.0)
        k = lorentz.random_momentum(rng, mass, max_rapidity)
        p = lorentz.random_momentum(rng, mass, max_rapidity)
        state = epr.TwoParticleState.singlet(k, p)
        a = lorentz.random_direction(rng)
        b = lorentz.random_direction(rng)
        trace = epr.correlation_trace(state, a, b)
        closed = epr.correlation_closed(mass, k, p, a, b)
        resid = max(resid, abs(trace - closed))
    return float(resid)


def run_all(
    seed: int = 42,
    samples: int = 1000,
    tolerance: float = DEFAULT_TOLERANCE,
    max_rapidity: float = 3.0,
    perturb_gamma1: float = 0.0,
) -> list[SuiteResult]:
    """Run every suite with deterministic seeding; order is fixed."""
    rng = np.random.default_rng(seed)
    suites = [
        ("clifford", lambda: check_clifford(perturb_gamma1)),
        ("normalization", lambda: check_normalization(rng, samples, max_rapidity)),
        ("weinberg", lambda: check_weinberg(rng, samples, max_rapidity)),
        ("dirac", lambda: check_dirac_equation(rng, samples, max_rapidity)),
        ("spin-spectrum", lambda: check_spin_spectrum(rng, samples, max_rapidity)),
        ("spin-commutators", lambda: check_spin_commutators(rng, min(samples, 200), max_rapidity)),
        ("covariance", lambda: check_covariance(rng, min(samples, 200), max_rapidity)),
        ("oracle-equivalence", lambda: check_correlation_oracle(rng, samples, min(max_rapidity, 2.0))),
    ]
    return [SuiteResult(name, fn(), tolerance) for name, fn in suites]
