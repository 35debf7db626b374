"""
Newton-Horner shifts and one-sided factorizations
"""
from typing import Tuple

import numpy as np

from src.errors import ParameterRangeError
from src.newton.linearization import check_grade_and_mu, gamma_stack, newton_points, partial_product
from src.polycore import arithmetic
from src.polycore.matrix_polynomial import MatrixPolynomial


def _check_shift_index(k: int, i: int):
    if not 1 <= i <= k:
        raise ParameterRangeError(f"Horner shift index must lie in [1, {k}], got {i}")


def newton_horner(P: MatrixPolynomial, i: int, lam: complex) -> np.ndarray:
    """
    i-th Newton-Horner shift P^i(lam) by the recurrence

    P^1 = gamma_k P_k + P_{k-1},  P^{j+1} = gamma_{k-j} P^j + P_{k-j-1}

    Args:
        P: Newton (or monomial) matrix polynomial of grade k
        i: Shift index in [1, k]
        lam: Evaluation point

    Returns:
        m x n matrix; P^k(lam) = P(lam)
    """
    points = newton_points(P)
    k = P.grade
    _check_shift_index(k, i)
    C = P.coeffs
    acc = (lam - points[k - 1]) * C[k] + C[k - 1]
    for j in range(1, i):
        acc = (lam - points[k - j - 1]) * acc + C[k - j - 1]
    return acc


def newton_horner_direct(P: MatrixPolynomial, i: int, lam: complex) -> np.ndarray:
    """P^i(lam) = sum_{t=0}^{i} P_{k-t} n_{k-i+1}^{k-t}(lam), summed term by term"""
    points = newton_points(P)
    k = P.grade
    _check_shift_index(k, i)
    acc = np.zeros(P.coeffs.shape[1:], dtype=complex)
    for t in range(i + 1):
        acc = acc + np.prod(lam - points[k - i: k - t]) * P.coeffs[k - t]
    return acc


def newton_horner_polynomial(P: MatrixPolynomial, i: int) -> np.ndarray:
    """Monomial coefficient stack of P^i"""
    points = newton_points(P)
    k = P.grade
    _check_shift_index(k, i)
    C = P.coeffs
    acc = arithmetic.add(arithmetic.scalar_times(gamma_stack(points, k), C[k][np.newaxis]), C[k - 1][np.newaxis])
    for j in range(1, i):
        acc = arithmetic.add(arithmetic.scalar_times(gamma_stack(points, k - j), acc), C[k - j - 1][np.newaxis])
    return acc


def one_sided_newton(P: MatrixPolynomial, mu: int) -> Tuple[MatrixPolynomial, MatrixPolynomial, int, int]:
    """
    Right and left factors with L H = e_{mu+1} (x) P and G L = e_{k-mu}^T (x) P

    Args:
        P: Newton (or monomial) matrix polynomial of grade k
        mu: Block parameter in [0, k-1]

    Returns:
        (H, G, mu + 1, k - mu) with H and G as monomial matrix polynomials
    """
    points = newton_points(P)
    k = P.grade
    check_grade_and_mu(k, mu)
    m, n = P.rows, P.cols

    # H = [D1^T; P^{k-mu}; ...; P^{k-1}]
    upper = [arithmetic.scalar_identity(partial_product(points, mu + 1, k - 1 - c), n) for c in range(k - mu)]
    lower = [newton_horner_polynomial(P, i) for i in range(k - mu, k)]
    H = arithmetic.block_matrix([[b] for b in upper + lower], [n] * (k - mu) + [m] * mu, [n])

    # G = [D2, n_1^mu P^1, ..., n_1^mu P^{k-mu-1}]
    n_mu = partial_product(points, 1, mu)
    left = [arithmetic.scalar_identity(partial_product(points, 1, mu - r), m) for r in range(mu + 1)]
    right = [arithmetic.scalar_times(n_mu, newton_horner_polynomial(P, i)) for i in range(1, k - mu)]
    G = arithmetic.block_matrix([left + right], [m], [m] * (mu + 1) + [n] * (k - mu - 1))

    return MatrixPolynomial.monomial(H), MatrixPolynomial.monomial(G), mu + 1, k - mu
