"""
Lagrange block minimal basis linearizations
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from src.errors import DimensionMismatchError, ParameterRangeError
from src.lagrange.coordinates import MuCoordinates, check_lagrange_mu, mu_coordinates
from src.pencils.block_pencil import BlockPencil, assemble
from src.pencils.minimal_bases import DualPair
from src.polycore import arithmetic
from src.polycore.basis import BasisKind, NodeSet, node_product
from src.polycore.matrix_polynomial import MatrixPolynomial, require_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LagrangeLinearization:
    """Pencil [[M + A K1 + K2^T B, K2^T], [K1, 0]] of a polynomial given by node samples"""

    pencil: BlockPencil
    mu: int
    A: np.ndarray
    B: np.ndarray
    source: MatrixPolynomial
    coords: MuCoordinates
    K1: MatrixPolynomial
    D1: MatrixPolynomial
    K2: MatrixPolynomial
    D2: MatrixPolynomial

    @property
    def grade(self) -> int:
        return self.source.grade

    @property
    def nodes(self) -> NodeSet:
        return self.source.nodes

    def dual_pairs(self) -> Tuple[DualPair, DualPair]:
        m, n = self.source.rows, self.source.cols
        return (DualPair(self.K1, self.D1, "lagrange", self.mu, n, self.nodes),
                DualPair(self.K2, self.D2, "lagrange", self.mu, m, self.nodes))


def deflate(numerator: np.ndarray, roots: Sequence[complex]) -> Tuple[np.ndarray, float]:
    """
    Divide a polynomial matrix by prod (lam - root) with synthetic division

    Args:
        numerator: Coefficient stack
        roots: Roots of the linear factors

    Returns:
        (quotient stack, largest remainder norm relative to the numerator)
    """
    scale = max(float(np.max(np.abs(numerator))), 1e-300)
    worst = 0.0
    quotient = numerator
    for root in roots:
        quotient, remainder = arithmetic.synthetic_division(quotient, root)
        worst = max(worst, float(np.max(np.abs(remainder), initial=0.0)) / scale)
    return quotient, worst


def _gamma(nodes: NodeSet, j: int) -> np.ndarray:
    return np.array([-nodes.node(j), 1.0], dtype=complex)


def _k_blocks(nodes: NodeSet, rows: int, size: int, first: int) -> np.ndarray:
    """Rows j = 0..rows-1 carrying (gamma_{first-j} I, -gamma_{first-2-j} I)"""
    stack = np.zeros((2, rows * size, (rows + 1) * size), dtype=complex)
    eye = np.eye(size)
    for j in range(rows):
        r = slice(j * size, (j + 1) * size)
        g, h = _gamma(nodes, first - j), _gamma(nodes, first - 2 - j)
        for d in range(2):
            stack[d, r, j * size:(j + 1) * size] = g[d] * eye
            stack[d, r, (j + 1) * size:(j + 2) * size] = -h[d] * eye
    return stack


def d_blocks(nodes: NodeSet, lo: int, hi: int, top: int, count: int, size: int) -> Tuple[np.ndarray, float]:
    """Block row c = n_lo^hi / (gamma_{top-c} gamma_{top-1-c}), c = 0..count-1"""
    numerator = node_product(nodes, range(lo, hi + 1))[:, np.newaxis, np.newaxis]
    entries, worst = [], 0.0
    for c in range(count):
        quotient, rem = deflate(numerator, [nodes.node(top - c), nodes.node(top - 1 - c)])
        entries.append(quotient[:, 0, 0])
        worst = max(worst, rem)
    length = max(len(e) for e in entries)
    stack = np.zeros((length, size, count * size), dtype=complex)
    for c, e in enumerate(entries):
        stack[:, :, c * size:(c + 1) * size] = arithmetic.scalar_identity(arithmetic.pad_vector(e, length), size)
    return stack, worst


def _k_d_pairs(nodes: NodeSet, k: int, mu: int, n: int, m: int):
    K1 = _k_blocks(nodes, k - mu - 1, n, k + 1)
    D1, rem1 = d_blocks(nodes, mu + 1, k + 1, k + 1, k - mu, n)
    K2 = _k_blocks(nodes, mu, m, mu + 2)
    D2, rem2 = d_blocks(nodes, 1, mu + 2, mu + 2, mu + 1, m)
    logger.debug(f"Lagrange D deflation remainders: {rem1:.2e}, {rem2:.2e}")
    return tuple(MatrixPolynomial.monomial(s) for s in (K1, D1, K2, D2))


def build_K_D_lagrange(nodes, k: int, mu: int, n: int, m: int
                       ) -> Tuple[MatrixPolynomial, MatrixPolynomial, MatrixPolynomial, MatrixPolynomial]:
    """
    Lagrange dual bases K1/D1 and K2/D2

    Args:
        nodes: k + 1 distinct nodes
        k: Grade
        mu: Block parameter in [0, k-1]
        n: Column block size
        m: Row block size

    Returns:
        (K1, D1, K2, D2) as monomial matrix polynomials
    """
    check_lagrange_mu(k, mu)
    nodes = nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)
    if len(nodes) != k + 1:
        raise ParameterRangeError(f"Grade {k} needs exactly {k + 1} nodes, got {len(nodes)}")
    return _k_d_pairs(nodes, k, mu, n, m)


def d_entry_remainders(nodes, k: int, mu: int) -> float:
    """Largest deflation remainder met while building the D1 and D2 entries"""
    nodes = nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)
    check_lagrange_mu(k, mu)
    _, rem1 = d_blocks(nodes, mu + 1, k + 1, k + 1, k - mu, 1)
    _, rem2 = d_blocks(nodes, 1, mu + 2, mu + 2, mu + 1, 1)
    return max(rem1, rem2)


def _term(P: MatrixPolynomial, i: int, j: int) -> np.ndarray:
    """P_i w_i gamma_j as a grade-1 stack"""
    return np.multiply.outer(P.nodes.weights[i - 1] * _gamma(P.nodes, j), P.coefficient(i))


def _row_body(P: MatrixPolynomial, mu: int) -> np.ndarray:
    """Body for mu < k-1: top block row plus trailing block column"""
    k = P.grade
    m, n = P.rows, P.cols
    rows, cols = mu + 1, k - mu
    M = np.zeros((2, rows * m, cols * n), dtype=complex)

    def put(r, c, block):
        M[:, r * m:(r + 1) * m, c * n:(c + 1) * n] = block

    put(0, 0, _term(P, k + 1, k) + _term(P, k, k + 1))
    for c in range(1, cols):
        put(0, c, _term(P, k - c, k + 1 - c))
    for r in range(1, rows):
        put(r, cols - 1, _term(P, mu + 1 - r, mu + 2 - r))
    return M


def _column_body(P: MatrixPolynomial) -> np.ndarray:
    """Body for mu = k-1: a single block column"""
    k = P.grade
    m, n = P.rows, P.cols
    M = np.zeros((2, k * m, n), dtype=complex)
    M[:, :m, :] = _term(P, k + 1, k) + _term(P, k, k + 1)
    for r in range(1, k):
        M[:, r * m:(r + 1) * m, :] = _term(P, k - r, k + 1 - r)
    return M


def _linearization(P: MatrixPolynomial, mu: int, A, B) -> LagrangeLinearization:
    require_basis(P, BasisKind.LAGRANGE)
    k = P.grade
    check_lagrange_mu(k, mu)
    m, n = P.rows, P.cols
    K1, D1, K2, D2 = _k_d_pairs(P.nodes, k, mu, n, m)

    a_shape = ((mu + 1) * m, (k - mu - 1) * n)
    b_shape = (mu * m, (k - mu) * n)
    A = np.zeros(a_shape, dtype=complex) if A is None else np.array(A, dtype=complex)
    B = np.zeros(b_shape, dtype=complex) if B is None else np.array(B, dtype=complex)
    if A.shape != a_shape:
        raise DimensionMismatchError(f"A must be {a_shape}, got {A.shape}")
    if B.shape != b_shape:
        raise DimensionMismatchError(f"B must be {b_shape}, got {B.shape}")

    M = _column_body(P) if mu == k - 1 else _row_body(P, mu)
    if A.size:
        M = M + arithmetic.matmul(A[np.newaxis], K1.coeffs)
    if B.size:
        M = M + arithmetic.matmul(arithmetic.transpose(K2.coeffs), B[np.newaxis])

    pencil = assemble(
        M, K1, K2,
        row_blocks=[m] * (mu + 1) + [n] * (k - mu - 1),
        col_blocks=[n] * (k - mu) + [m] * mu,
        family="lagrange", param=mu,
    )
    return LagrangeLinearization(pencil=pencil, mu=mu, A=A, B=B, source=P, coords=mu_coordinates(P.nodes, k, mu),
                                 K1=K1, D1=D1, K2=K2, D2=D2)


def colleague_lagrange(P: MatrixPolynomial, mu: int) -> LagrangeLinearization:
    """
    Colleague Lagrange pencil of P

    Args:
        P: Lagrange matrix polynomial (k + 1 samples), grade k >= 1
        mu: Block parameter in [0, k-1]

    Returns:
        LagrangeLinearization with A = 0 and B = 0
    """
    return _linearization(P, mu, None, None)


def family_lagrange(P: MatrixPolynomial, mu: int, A: Optional[np.ndarray] = None,
                    B: Optional[np.ndarray] = None) -> LagrangeLinearization:
    """
    Lagrange linearization with body M + A K1 + K2^T B

    Args:
        P: Lagrange matrix polynomial
        mu: Block parameter in [0, k-1]
        A: (mu+1)m x (k-mu-1)n constant matrix
        B: mu*m x (k-mu)n constant matrix

    Returns:
        LagrangeLinearization
    """
    return _linearization(P, mu, A, B)
