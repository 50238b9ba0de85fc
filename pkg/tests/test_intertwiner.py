import numpy as np

from conftest import maxabs
from relspin.dirac import GAMMAS, bispinor_rep, slash
from relspin.intertwiner import (
    dirac_residual,
    energy_projector,
    gram,
    v_of,
    vbar,
    weinberg_residual,
)
from relspin.lorentz import (
    SIGMA2,
    OnShellMomentum,
    random_lorentz,
    random_momentum,
    random_rotation,
    rotation4,
    sl2c_boost,
    standard_boost,
)


def test_rest_frame_value():
    v = v_of(OnShellMomentum.rest(1.0))
    assert maxabs(v - np.vstack([SIGMA2, SIGMA2]) / np.sqrt(2.0)) < 1e-15


def test_normalization_identities(rng):
    for _ in range(200):
        mass = rng.uniform(0.3, 2.0)
        k = random_momentum(rng, mass)
        v = v_of(k)
        vb = vbar(v)
        assert maxabs(vb @ v - np.eye(2)) < 1e-10
        assert maxabs(v @ vb - (slash(k.vec) + mass * np.eye(4)) / (2.0 * mass)) < 1e-10
        for mu in range(4):
            assert maxabs(vb @ GAMMAS[mu] @ v - (k.vec[mu] / mass) * np.eye(2)) < 1e-10


def test_dirac_equation_residual(rng):
    assert dirac_residual(OnShellMomentum.rest(1.0)) < 1e-15
    for mass in (1.0, 0.511):
        for _ in range(50):
            assert dirac_residual(random_momentum(rng, mass)) < 1e-10


def test_weinberg_identity_transformation(rng):
    k = random_momentum(rng)
    assert weinberg_residual(np.eye(4), k) < 1e-12


def test_weinberg_boost_from_rest(rng):
    # v(p) is exactly the bispinor-boosted rest amplitude
    for _ in range(30):
        p = random_momentum(rng)
        rest = OnShellMomentum.rest(p.mass)
        assert weinberg_residual(standard_boost(p), rest) < 1e-10
        direct = bispinor_rep(sl2c_boost(p)) @ v_of(rest)
        assert maxabs(direct - v_of(p)) < 1e-10


def test_weinberg_rotations_and_products(rng):
    for _ in range(50):
        k = random_momentum(rng, mass=rng.uniform(0.3, 2.0))
        assert weinberg_residual(rotation4(random_rotation(rng)), k) < 1e-10
        assert weinberg_residual(random_lorentz(rng), k) < 1e-10


def test_gram_rest_structure():
    g = gram(OnShellMomentum.rest(1.0))
    ones = np.array([[1.0, 1.0], [1.0, 1.0]])
    assert maxabs(g - 0.5 * np.kron(ones, np.eye(2))) < 1e-15


def test_gram_hermitian_and_trace(rng):
    for _ in range(30):
        k = random_momentum(rng, mass=rng.uniform(0.3, 2.0))
        g = gram(k)
        assert maxabs(g - g.conj().T) < 1e-12
        # v+ v = vbar gamma^0 v = (k^0/m) I
        v = v_of(k)
        assert maxabs(v.conj().T @ v - (k.energy / k.mass) * np.eye(2)) < 1e-10
        assert maxabs(vbar(v) @ GAMMAS[0] @ v - (k.energy / k.mass) * np.eye(2)) < 1e-10


def test_energy_projector_idempotent(rng):
    for _ in range(30):
        p = energy_projector(random_momentum(rng, mass=rng.uniform(0.3, 2.0)))
        assert maxabs(p @ p - p) < 1e-10
