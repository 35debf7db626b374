"""
Shared fixtures
"""
import numpy as np
import pytest

from src.config import DEMO_DIR
from src.polycore import MatrixPolynomial


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def newton_demo():
    """lam^2 + 1 in the Newton basis on nodes {0, 1}"""
    return MatrixPolynomial.newton([0, 1], [[[1]], [[1]], [[1]]])


@pytest.fixture
def cheb_demo():
    """T_2 = 2 lam^2 - 1"""
    return MatrixPolynomial.chebyshev([[[0]], [[0]], [[1]]], 1)


@pytest.fixture
def lagrange_demo():
    """1 + 2 lam through (0, 1) and (1, 3)"""
    return MatrixPolynomial.lagrange([0, 1], [[[1]], [[3]]])


@pytest.fixture
def demo_dir():
    return DEMO_DIR
