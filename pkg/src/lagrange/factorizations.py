"""
One-sided factorizations of Lagrange linearizations
"""
import logging
from typing import List, Tuple

import numpy as np

from src.lagrange.coordinates import (
    MuCoordinates,
    check_lagrange_mu,
    e_factor,
    f_factor,
    mu_coordinates,
    other_indices,
    split_stack,
)
from src.lagrange.linearization import d_blocks, deflate
from src.polycore import arithmetic
from src.polycore.basis import BasisKind
from src.polycore.matrix_polynomial import MatrixPolynomial, require_basis

logger = logging.getLogger(__name__)


def _weighted_sum(terms: List[Tuple[complex, np.ndarray]], length: int) -> np.ndarray:
    acc = np.zeros(length, dtype=complex)
    for coeff, poly in terms:
        acc += coeff * arithmetic.pad_vector(poly, length)
    return acc


def _shift_poly(P: MatrixPolynomial, j: int, left: np.ndarray, right: np.ndarray, roots) -> Tuple[np.ndarray, float]:
    """(-left * S_{j+1} + right * T_j) / prod (lam - root)"""
    k = P.grade
    T = split_stack(P, 1, j)
    S = split_stack(P, j + 1, k + 1)
    numerator = arithmetic.add(arithmetic.scalar_times(-left, S), arithmetic.scalar_times(right, T))
    return deflate(numerator, roots)


def p_shifts(P: MatrixPolynomial, mu: int, coords: MuCoordinates) -> Tuple[List[np.ndarray], float]:
    """
    The polynomials used in the right factor, for j = 1..mu

    Args:
        P: Lagrange matrix polynomial
        mu: Block parameter
        coords: Coordinates of 1 for (k, mu)

    Returns:
        ([shift_1, ..., shift_mu] as coefficient stacks, largest deflation remainder)
    """
    nodes = P.nodes
    out, worst = [], 0.0
    for j in range(1, mu + 1):
        A_j = _weighted_sum([(coords.a_coord(i), e_factor(nodes, mu, i)) for i in range(1, j + 1)], mu + 1)
        B_j = _weighted_sum([(coords.a_coord(i), e_factor(nodes, mu, i)) for i in range(j + 1, mu + 2)], mu + 1)
        roots = [nodes.node(s) for s in other_indices(1, mu + 2, (j + 1,))]
        poly, rem = _shift_poly(P, j, A_j, B_j, roots)
        out.append(poly)
        worst = max(worst, rem)
    return out, worst


def q_shifts(P: MatrixPolynomial, mu: int, coords: MuCoordinates) -> Tuple[List[np.ndarray], float]:
    """
    The polynomials used in the left factor, for j = mu+1..k-1

    Args:
        P: Lagrange matrix polynomial
        mu: Block parameter
        coords: Coordinates of 1 for (k, mu)

    Returns:
        ([shift_{mu+1}, ..., shift_{k-1}] as coefficient stacks, largest deflation remainder)
    """
    nodes = P.nodes
    k = P.grade
    out, worst = [], 0.0
    for j in range(mu + 1, k):
        A_j = _weighted_sum([(coords.b_coord(i), f_factor(nodes, k, mu, i)) for i in range(mu + 1, j + 1)], k - mu)
        B_j = _weighted_sum([(coords.b_coord(i), f_factor(nodes, k, mu, i)) for i in range(j + 1, k + 1)], k - mu)
        roots = [nodes.node(s) for s in other_indices(mu + 1, k + 1, (j + 1,))]
        poly, rem = _shift_poly(P, j, A_j, B_j, roots)
        out.append(poly)
        worst = max(worst, rem)
    return out, worst


def one_sided_lagrange(P: MatrixPolynomial, mu: int
                       ) -> Tuple[MatrixPolynomial, MatrixPolynomial, np.ndarray, np.ndarray]:
    """
    Right and left factors with block row r of L H equal to a_{mu+1-r} P
    and block column c of G L equal to b_{k-c} P

    Args:
        P: Lagrange matrix polynomial of grade k
        mu: Block parameter in [0, k-1]

    Returns:
        (H, G, a, b) with a = [a_{mu+1}, ..., a_1] and b = [b_k, ..., b_{mu+1}]
    """
    require_basis(P, BasisKind.LAGRANGE)
    k = P.grade
    check_lagrange_mu(k, mu)
    m, n = P.rows, P.cols
    nodes = P.nodes
    coords = mu_coordinates(nodes, k, mu)

    D1, _ = d_blocks(nodes, mu + 1, k + 1, k + 1, k - mu, n)
    D2, _ = d_blocks(nodes, 1, mu + 2, mu + 2, mu + 1, m)
    ps, p_rem = p_shifts(P, mu, coords)
    qs, q_rem = q_shifts(P, mu, coords)
    logger.debug(f"Lagrange shift deflation remainders: {p_rem:.2e}, {q_rem:.2e}")

    # H = [D1^T; shift_mu; ...; shift_1]
    upper = [D1[:, :, c * n:(c + 1) * n] for c in range(k - mu)]
    H = arithmetic.block_matrix([[b] for b in upper + ps[::-1]], [n] * (k - mu) + [m] * mu, [n])

    # G = [D2, shift_{k-1}, ..., shift_{mu+1}]
    G = arithmetic.block_matrix([[D2] + qs[::-1]], [m], [(mu + 1) * m] + [n] * (k - mu - 1))

    return MatrixPolynomial.monomial(H), MatrixPolynomial.monomial(G), coords.a, coords.b


def shift_remainders(P: MatrixPolynomial, mu: int) -> float:
    """Largest deflation remainder of the factor polynomials (zero in exact arithmetic)"""
    require_basis(P, BasisKind.LAGRANGE)
    coords = mu_coordinates(P.nodes, P.grade, mu)
    return max(p_shifts(P, mu, coords)[1], q_shifts(P, mu, coords)[1])
