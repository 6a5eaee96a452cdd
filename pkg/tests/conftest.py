from functools import lru_cache

import numpy as np
import pytest

from mafrft import build_eigenbasis


@lru_cache(maxsize=None)
def cached_basis(n, variant):
    return build_eigenbasis(n, variant)


@pytest.fixture
def basis_of():
    return cached_basis


def random_signal(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)
