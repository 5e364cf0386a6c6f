from functools import partial

import pytest
import numpy as np
from click.testing import CliRunner

from ..groups.sampling import random_member
from ..utils.general import inf_norm


def mod1_distance(a: float, b: float) -> float:
    return abs((a - b + 0.5) % 1.0 - 0.5)


def relative_residual(a: np.ndarray, b: np.ndarray) -> float:
    return inf_norm(a - b) / max(1.0, inf_norm(b))


def isotropic_vector(m: int, n: int, rng: np.random.Generator) -> np.ndarray:
    x = rng.normal(size=m) + 1j * rng.normal(size=m)
    y = rng.normal(size=n) + 1j * rng.normal(size=n)
    return np.concatenate([x / np.linalg.norm(x), y / np.linalg.norm(y)])


def elliptic_diagonal(*angles) -> np.ndarray:
    return np.diag(np.exp(1j * np.array(angles)))


def hyperbolic_element(t: float) -> np.ndarray:
    return np.array([[np.cosh(t), np.sinh(t)], [np.sinh(t), np.cosh(t)]], dtype=complex)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def gen_member(rng):
    """Returns a factory (m, n) -> (g, path, lift) drawn from the shared generator."""
    return partial(random_member, rng=rng, scale=0.5)


@pytest.fixture
def cli_runner():
    return CliRunner()
