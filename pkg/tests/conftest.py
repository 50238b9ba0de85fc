from itertools import permutations

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def epsilon4_upper() -> np.ndarray:
    """Totally antisymmetric symbol, eps^{0123} = +1 (brute-force parity)."""
    eps = np.zeros((4, 4, 4, 4))
    for perm in permutations(range(4)):
        p = list(perm)
        sign = 1
        for i in range(4):
            while p[i] != i:
                j = p[i]
                p[i], p[j] = p[j], p[i]
                sign = -sign
        eps[perm] = sign
    return eps


def epsilon3() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1.0
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1.0
    return eps


def random_bloch(rng: np.random.Generator, max_norm: float = 1.0) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v) * rng.uniform(0.0, max_norm)


def maxabs(x) -> float:
    return float(np.max(np.abs(x)))
