import numpy as np
import pytest

from conftest import epsilon3, maxabs
from relspin.dirac import (
    GAMMA0,
    GAMMAS,
    PauliLubanskiOps,
    bispinor_rep,
    gammas,
    lorentz_generators,
    pauli_lubanski,
    slash,
    spin_matrix,
    spin_spectrum,
)
from relspin.lorentz import (
    METRIC,
    PAULI,
    OnShellMomentum,
    lambda_of_sl2c,
    random_direction,
    random_lorentz,
    random_momentum,
    random_su2,
    sl2c_boost,
    sl2c_of_lorentz,
)


def _diag(block):
    z = np.zeros((2, 2))
    return np.block([[block, z], [z, block]])


def test_clifford_relations_exact():
    g0, g1, g2, g3, g5 = gammas()
    assert maxabs(g0 @ g0 - np.eye(4)) == 0.0
    assert maxabs(g1 @ g1 + np.eye(4)) == 0.0
    assert maxabs(g0 @ g1 + g1 @ g0) == 0.0
    for mu in range(4):
        for nu in range(4):
            anti = GAMMAS[mu] @ GAMMAS[nu] + GAMMAS[nu] @ GAMMAS[mu]
            assert maxabs(anti - 2.0 * METRIC[mu, nu] * np.eye(4)) == 0.0
        assert maxabs(GAMMAS[mu] @ g5 + g5 @ GAMMAS[mu]) == 0.0
    assert maxabs(g5 @ g5 - np.eye(4)) == 0.0


def test_slash_contraction():
    v = np.array([1.5, -0.3, 0.2, 0.9])
    expected = v[0] * GAMMAS[0] - v[1] * GAMMAS[1] - v[2] * GAMMAS[2] - v[3] * GAMMAS[3]
    assert maxabs(slash(v) - expected) == 0.0


def test_bispinor_rep_identity_and_parity(rng):
    assert maxabs(bispinor_rep(np.eye(2)) - np.eye(4)) == 0.0
    for _ in range(30):
        a = random_su2(rng) @ sl2c_boost(random_momentum(rng))
        rep = bispinor_rep(a)
        assert maxabs(rep.conj().T @ GAMMA0 @ rep - GAMMA0) < 1e-10
        assert abs(np.linalg.det(rep) - 1.0) < 1e-10


def test_bispinor_rep_is_representation(rng):
    for _ in range(30):
        a1 = random_su2(rng) @ sl2c_boost(random_momentum(rng))
        a2 = sl2c_boost(random_momentum(rng))
        assert maxabs(bispinor_rep(a1 @ a2) - bispinor_rep(a1) @ bispinor_rep(a2)) < 1e-10


def test_bispinor_rep_rotations_unitary_boosts_positive(rng):
    u = bispinor_rep(random_su2(rng))
    assert maxabs(u.conj().T @ u - np.eye(4)) < 1e-12
    h = bispinor_rep(sl2c_boost(random_momentum(rng)))
    assert maxabs(h - h.conj().T) < 1e-12
    assert np.linalg.eigvalsh(h).min() > 0.0


def test_bispinor_rep_rejects_non_unimodular():
    with pytest.raises(ValueError):
        bispinor_rep(1.5 * np.eye(2))


def test_generator_sigma_12():
    gen = lorentz_generators()
    assert maxabs(gen[1, 2] - 0.5 * _diag(PAULI[2])) < 1e-15


def test_generator_bracket():
    gen = lorentz_generators()
    comm = gen[1, 2] @ gen[2, 3] - gen[2, 3] @ gen[1, 2]
    assert maxabs(comm - 1j * gen[3, 1]) < 1e-15


def test_generator_double_cover():
    # a full turn about z maps to minus the identity in the bispinor rep
    gen12 = lorentz_generators()[1, 2]
    rotated = np.diag(np.exp(-2j * np.pi * np.diag(gen12)))
    assert maxabs(rotated + np.eye(4)) < 1e-12


def test_generator_covariance(rng):
    gen = lorentz_generators()
    for _ in range(20):
        lam = random_lorentz(rng, max_rapidity=2.0)
        rep = bispinor_rep(sl2c_of_lorentz(lam))
        rep_inv = np.linalg.inv(rep)
        for mu in range(4):
            for nu in range(mu + 1, 4):
                lhs = rep_inv @ gen[mu, nu] @ rep
                rhs = np.einsum("a,b,abij->ij", lam[mu], lam[nu], gen)
                assert maxabs(lhs - rhs) < 1e-10


def test_pauli_lubanski_rest_frame():
    ops = pauli_lubanski(OnShellMomentum.rest(1.0))
    assert isinstance(ops, PauliLubanskiOps)
    assert maxabs(ops.w0) == 0.0
    for i in range(3):
        assert maxabs(ops.w[i] - 0.5 * _diag(PAULI[i])) == 0.0


def test_pauli_lubanski_longitudinal():
    ops = pauli_lubanski(OnShellMomentum(1.0, np.array([0.0, 0.0, 1.0])))
    assert maxabs(ops.w0 - 0.5 * _diag(PAULI[2])) == 0.0


def test_pauli_lubanski_transversality(rng):
    for _ in range(50):
        k = random_momentum(rng, mass=rng.uniform(0.3, 2.0))
        ops = pauli_lubanski(k)
        contraction = k.energy * ops.w0 - np.einsum("i,iab->ab", k.spatial, ops.w)
        assert maxabs(contraction) < 1e-10


def test_spin_matrix_rest_frame(rng):
    n = random_direction(rng)
    s = spin_matrix(n, OnShellMomentum.rest(1.3))
    assert maxabs(s - 0.5 * _diag(np.tensordot(n, PAULI, axes=1))) < 1e-14


def test_spin_matrix_longitudinal_reduces_to_rest_form():
    s = spin_matrix(np.array([0.0, 0.0, 1.0]), OnShellMomentum(1.0, np.array([0.0, 0.0, 2.0])))
    assert maxabs(s - 0.5 * _diag(PAULI[2])) < 1e-12


def test_spin_matrix_explicit_block_formula(rng):
    for _ in range(20):
        k = random_momentum(rng, mass=rng.uniform(0.3, 2.0))
        n = random_direction(rng)
        m, k0, kv = k.mass, k.energy, k.spatial
        direct = (
            k0 * _diag(np.tensordot(n, PAULI, axes=1))
            - 1j
            * np.block(
                [
                    [np.tensordot(np.cross(n, kv), PAULI, axes=1), np.zeros((2, 2))],
                    [np.zeros((2, 2)), -np.tensordot(np.cross(n, kv), PAULI, axes=1)],
                ]
            )
            - ((n @ kv) / (k0 + m)) * _diag(np.tensordot(kv, PAULI, axes=1))
        ) / (2.0 * m)
        assert maxabs(spin_matrix(n, k) - direct) < 1e-12


def test_spin_matrix_rejects_non_unit_direction():
    with pytest.raises(ValueError):
        spin_matrix(np.array([0.0, 0.0, 2.0]), OnShellMomentum.rest(1.0))


def test_spin_spectrum_half_integer(rng):
    target = np.array([-0.5, -0.5, 0.5, 0.5])
    for _ in range(100):
        k = random_momentum(rng, mass=rng.uniform(0.3, 2.0))
        vals, vecs = spin_spectrum(spin_matrix(random_direction(rng), k))
        assert maxabs(vals - target) < 1e-10
        assert vecs.shape == (4, 4)


def test_spin_matrix_squares_to_quarter(rng):
    k = random_momentum(rng)
    s = spin_matrix(random_direction(rng), k)
    assert maxabs(s @ s - 0.25 * np.eye(4)) < 1e-10


def test_spin_spectrum_rejects_complex_spectrum():
    with pytest.raises(ValueError):
        spin_spectrum(np.array([[0.0, 1.0], [-1.0, 0.0]]))


def test_spin_commutators(rng):
    eps = epsilon3()
    for _ in range(30):
        k = random_momentum(rng, mass=rng.uniform(0.3, 2.0))
        s = [spin_matrix(np.eye(3)[i], k) for i in range(3)]
        for i in range(3):
            for j in range(3):
                comm = s[i] @ s[j] - s[j] @ s[i]
                expected = 1j * np.einsum("l,lab->ab", eps[i, j], np.stack(s))
                assert maxabs(comm - expected) < 1e-10


def test_spectrum_eigenvectors_diagonalize(rng):
    k = random_momentum(rng)
    s = spin_matrix(random_direction(rng), k)
    vals, vecs = spin_spectrum(s)
    assert maxabs(s @ vecs - vecs @ np.diag(vals)) < 1e-10


def test_gamma_covariance_with_slash(rng):
    # D(A) (k.gamma) D(A)^-1 = (lam k).gamma, the vector covariance behind it all
    for _ in range(20):
        lam = random_lorentz(rng, max_rapidity=2.0)
        a = sl2c_of_lorentz(lam)
        rep = bispinor_rep(a)
        k = random_momentum(rng, mass=rng.uniform(0.3, 2.0), max_rapidity=2.0)
        lhs = rep @ slash(k.vec) @ np.linalg.inv(rep)
        assert maxabs(lhs - slash(lam @ k.vec)) < 1e-9


def test_lambda_of_su2_block_structure(rng):
    lam = lambda_of_sl2c(random_su2(rng))
    assert maxabs(lam[0, 1:]) < 1e-12
    assert maxabs(lam[1:, 0]) < 1e-12
    assert abs(lam[0, 0] - 1.0) < 1e-12
