"""
Newton block minimal basis linearizations
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as Poly

from src.errors import DimensionMismatchError, ParameterRangeError
from src.pencils.block_pencil import BlockPencil, assemble
from src.pencils.minimal_bases import DualPair
from src.polycore import arithmetic
from src.polycore.basis import BasisKind, NodeSet
from src.polycore.matrix_polynomial import MatrixPolynomial, require_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NewtonLinearization:
    """Pencil [[M + A K1 + K2^T B, K2^T], [K1, 0]] of a Newton-basis polynomial"""

    pencil: BlockPencil
    mu: int
    A: np.ndarray
    B: np.ndarray
    source: MatrixPolynomial
    K1: MatrixPolynomial
    D1: MatrixPolynomial
    K2: MatrixPolynomial
    D2: MatrixPolynomial

    @property
    def grade(self) -> int:
        return self.source.grade

    @property
    def points(self) -> np.ndarray:
        return newton_points(self.source)

    def dual_pairs(self) -> Tuple[DualPair, DualPair]:
        nodes = self.source.nodes
        m, n = self.source.rows, self.source.cols
        return (DualPair(self.K1, self.D1, "newton", self.mu, n, nodes),
                DualPair(self.K2, self.D2, "newton", self.mu, m, nodes))


def newton_points(p: MatrixPolynomial) -> np.ndarray:
    """Newton nodes of p; a monomial polynomial is Newton with every node at 0"""
    require_basis(p, BasisKind.NEWTON, BasisKind.MONOMIAL)
    if p.kind is BasisKind.MONOMIAL:
        return np.zeros(p.grade, dtype=complex)
    return p.nodes.points


def gamma_stack(points: np.ndarray, j: int) -> np.ndarray:
    return np.array([-points[j - 1], 1.0], dtype=complex)


def partial_product(points: np.ndarray, i: int, j: int) -> np.ndarray:
    """Ascending coefficients of n_i^j = prod_{l=i}^{j} (lam - x_l)"""
    if j < i:
        return np.ones(1, dtype=complex)
    return Poly.polyfromroots(points[i - 1: j]).astype(complex)


def check_grade_and_mu(k: int, mu: int):
    if k < 1:
        raise ParameterRangeError(f"Linearizations need grade k >= 1, got {k}")
    if not 0 <= mu <= k - 1:
        raise ParameterRangeError(f"mu must lie in [0, {k - 1}], got {mu}")


def _k_blocks(points: np.ndarray, rows: int, size: int, first: int) -> np.ndarray:
    """Rows j = 0..rows-1 carrying (-I, gamma_{first-j} I)"""
    stack = np.zeros((2, rows * size, (rows + 1) * size), dtype=complex)
    eye = np.eye(size)
    for j in range(rows):
        r = slice(j * size, (j + 1) * size)
        stack[0, r, j * size:(j + 1) * size] = -eye
        g = gamma_stack(points, first - j)
        stack[0, r, (j + 1) * size:(j + 2) * size] = g[0] * eye
        stack[1, r, (j + 1) * size:(j + 2) * size] = g[1] * eye
    return stack


def _d_blocks(products: Sequence[np.ndarray], size: int) -> np.ndarray:
    """Block row [p_0 I, p_1 I, ...] from scalar polynomial coefficients"""
    length = max(len(p) for p in products)
    stack = np.zeros((length, size, len(products) * size), dtype=complex)
    for c, p in enumerate(products):
        stack[:, :, c * size:(c + 1) * size] = arithmetic.scalar_identity(arithmetic.pad_vector(p, length), size)
    return stack


def _k_d_pairs(points: np.ndarray, k: int, mu: int, n: int, m: int):
    K1 = _k_blocks(points, k - mu - 1, n, k - 1)
    D1 = _d_blocks([partial_product(points, mu + 1, k - 1 - c) for c in range(k - mu)], n)
    K2 = _k_blocks(points, mu, m, mu)
    D2 = _d_blocks([partial_product(points, 1, mu - r) for r in range(mu + 1)], m)
    return tuple(MatrixPolynomial.monomial(s) for s in (K1, D1, K2, D2))


def build_K_D_newton(nodes, k: int, mu: int, n: int, m: int
                     ) -> Tuple[MatrixPolynomial, MatrixPolynomial, MatrixPolynomial, MatrixPolynomial]:
    """
    Newton dual minimal bases K1/D1 and K2/D2

    Args:
        nodes: NodeSet or raw points (which may repeat), at least x_1..x_{k-1}
        k: Grade
        mu: Block parameter in [0, k-1]
        n: Column block size
        m: Row block size

    Returns:
        (K1, D1, K2, D2) as monomial matrix polynomials; K blocks may have zero rows
    """
    check_grade_and_mu(k, mu)
    points = nodes.points if isinstance(nodes, NodeSet) else np.asarray(nodes, dtype=complex)
    if len(points) < k - 1:
        raise ParameterRangeError(f"Grade {k} needs at least {k - 1} nodes, got {len(points)}")
    return _k_d_pairs(points, k, mu, n, m)


def _body(P: np.ndarray, points: np.ndarray, k: int, mu: int) -> np.ndarray:
    _, m, n = P.shape
    rows, cols = mu + 1, k - mu
    M = np.zeros((2, rows * m, cols * n), dtype=complex)

    def put(r, c, const, lin=None):
        M[0, r * m:(r + 1) * m, c * n:(c + 1) * n] = const
        if lin is not None:
            M[1, r * m:(r + 1) * m, c * n:(c + 1) * n] = lin

    # top block row: gamma_k P_k + P_{k-1}, P_{k-2}, ..., P_mu
    put(0, 0, P[k - 1] - points[k - 1] * P[k], P[k])
    for c in range(1, cols):
        put(0, c, P[k - 1 - c])
    # trailing block column: P_{mu-1}, ..., P_0
    for r in range(1, rows):
        put(r, cols - 1, P[mu - r])
    return M


def _linearization(P: MatrixPolynomial, mu: int, A, B) -> NewtonLinearization:
    points = newton_points(P)
    k = P.grade
    check_grade_and_mu(k, mu)
    m, n = P.rows, P.cols
    K1, D1, K2, D2 = _k_d_pairs(points, k, mu, n, m)

    a_shape = ((mu + 1) * m, (k - mu - 1) * n)
    b_shape = (mu * m, (k - mu) * n)
    A = np.zeros(a_shape, dtype=complex) if A is None else np.array(A, dtype=complex)
    B = np.zeros(b_shape, dtype=complex) if B is None else np.array(B, dtype=complex)
    if A.shape != a_shape:
        raise DimensionMismatchError(f"A must be {a_shape}, got {A.shape}")
    if B.shape != b_shape:
        raise DimensionMismatchError(f"B must be {b_shape}, got {B.shape}")

    M = _body(P.coeffs, points, k, mu)
    if A.size:
        M = M + arithmetic.matmul(A[np.newaxis], K1.coeffs)
    if B.size:
        M = M + arithmetic.matmul(arithmetic.transpose(K2.coeffs), B[np.newaxis])

    pencil = assemble(
        M, K1, K2,
        row_blocks=[m] * (mu + 1) + [n] * (k - mu - 1),
        col_blocks=[n] * (k - mu) + [m] * mu,
        family="newton", param=mu,
    )
    return NewtonLinearization(pencil=pencil, mu=mu, A=A, B=B, source=P, K1=K1, D1=D1, K2=K2, D2=D2)


def colleague_newton(P: MatrixPolynomial, mu: int) -> NewtonLinearization:
    """
    Colleague Newton pencil of P

    Args:
        P: Matrix polynomial in the Newton (or monomial) basis, grade k >= 1
        mu: Block parameter in [0, k-1]

    Returns:
        NewtonLinearization with A = 0 and B = 0
    """
    return _linearization(P, mu, None, None)


def family_newton(P: MatrixPolynomial, mu: int, A: Optional[np.ndarray] = None,
                  B: Optional[np.ndarray] = None) -> NewtonLinearization:
    """
    Newton linearization with body M + A K1 + K2^T B

    Args:
        P: Matrix polynomial in the Newton (or monomial) basis
        mu: Block parameter in [0, k-1]
        A: (mu+1)m x (k-mu-1)n constant matrix
        B: mu*m x (k-mu)n constant matrix

    Returns:
        NewtonLinearization
    """
    return _linearization(P, mu, A, B)
