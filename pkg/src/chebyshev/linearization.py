"""
Chebyshev block minimal basis linearizations
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.errors import DimensionMismatchError, ParameterRangeError
from src.pencils.block_pencil import BlockPencil, assemble
from src.pencils.minimal_bases import DualPair
from src.polycore import arithmetic
from src.polycore.basis import BasisKind, chebyshev_monomial
from src.polycore.matrix_polynomial import MatrixPolynomial, require_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ChebLinearization:
    """Pencil [[M + A K1 + K2^T B, K2^T], [K1, 0]] of a Chebyshev-basis polynomial"""

    pencil: BlockPencil
    eps: int
    kind: int
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

    def dual_pairs(self) -> Tuple[DualPair, DualPair]:
        m, n = self.source.rows, self.source.cols
        return (DualPair(self.K1, self.D1, f"cheb{self.kind}", self.eps, n),
                DualPair(self.K2, self.D2, "cheb2", self.eps, m))


def check_grade_and_eps(k: int, eps: int):
    if k < 1:
        raise ParameterRangeError(f"Linearizations need grade k >= 1, got {k}")
    if not 0 <= eps <= k - 1:
        raise ParameterRangeError(f"eps must lie in [0, {k - 1}], got {eps}")


def check_kind(kind: int):
    if kind not in (1, 2):
        raise ParameterRangeError(f"Chebyshev kind must be 1 or 2, got {kind}")


def _k_blocks(rows: int, size: int, kind: int) -> np.ndarray:
    """Rows [I, -2 lam I, I] with last row [..., I, -phi_1 I]"""
    stack = np.zeros((2, rows * size, (rows + 1) * size), dtype=complex)
    eye = np.eye(size)
    slope = 1.0 if kind == 1 else 2.0
    for s in range(rows):
        r = slice(s * size, (s + 1) * size)
        stack[0, r, s * size:(s + 1) * size] = eye
        if s < rows - 1:
            stack[1, r, (s + 1) * size:(s + 2) * size] = -2.0 * eye
            stack[0, r, (s + 2) * size:(s + 3) * size] = eye
        else:
            stack[1, r, (s + 1) * size:(s + 2) * size] = -slope * eye
    return stack


def d_blocks(top: int, size: int, kind: int) -> np.ndarray:
    """Block row [phi_top I, ..., phi_0 I]"""
    stack = np.zeros((top + 1, size, (top + 1) * size), dtype=complex)
    for c in range(top + 1):
        phi = arithmetic.pad_vector(chebyshev_monomial(top - c, kind), top + 1)
        stack[:, :, c * size:(c + 1) * size] = arithmetic.scalar_identity(phi, size)
    return stack


def build_K_D_cheb(k: int, eps: int, kinds: Tuple[int, int], n: int, m: int
                   ) -> Tuple[MatrixPolynomial, MatrixPolynomial, MatrixPolynomial, MatrixPolynomial]:
    """
    Chebyshev dual minimal bases K1/D1 of kind kinds[0] and K2/D2 of kind kinds[1]

    Args:
        k: Grade
        eps: Number of block rows of K1, in [0, k-1]
        kinds: (i, j), each 1 or 2
        n: Column block size
        m: Row block size

    Returns:
        (K1, D1, K2, D2) as monomial matrix polynomials
    """
    check_grade_and_eps(k, eps)
    i, j = kinds
    check_kind(i)
    check_kind(j)
    K1 = _k_blocks(eps, n, i)
    D1 = d_blocks(eps, n, i)
    K2 = _k_blocks(k - 1 - eps, m, j)
    D2 = d_blocks(k - 1 - eps, m, j)
    return tuple(MatrixPolynomial.monomial(s) for s in (K1, D1, K2, D2))


def _interior_body(C: np.ndarray, k: int, eps: int) -> np.ndarray:
    """1 <= eps <= k-2: first two block columns plus a full last block row"""
    _, m, n = C.shape
    R = k - eps
    M = np.zeros((2, R * m, (eps + 1) * n), dtype=complex)

    def put(r, c, const, lin=None):
        M[0, r * m:(r + 1) * m, c * n:(c + 1) * n] += const
        if lin is not None:
            M[1, r * m:(r + 1) * m, c * n:(c + 1) * n] += lin

    for r in range(R):
        put(r, 0, C[k - 1 - r])
        put(r, 1, -C[k - r])
    M[1, :m, :n] += 2.0 * C[k]
    put(1, 0, -C[k])
    put(R - 1, 1, C[eps - 1])
    for c in range(2, eps + 1):
        put(R - 1, c, C[eps - c])
    return M


def _row_body(C: np.ndarray, k: int) -> np.ndarray:
    """eps = k-1: [2 lam P_k + P_{k-1}, P_{k-2} - P_k, P_{k-3}, ..., P_0]"""
    _, m, n = C.shape
    M = np.zeros((2, m, k * n), dtype=complex)
    M[0, :, :n] = C[k - 1]
    M[1, :, :n] = 2.0 * C[k]
    if k >= 2:
        M[0, :, n:2 * n] = C[k - 2] - C[k]
    for c in range(2, k):
        M[0, :, c * n:(c + 1) * n] = C[k - 1 - c]
    return M


def _column_body(C: np.ndarray, k: int) -> np.ndarray:
    """eps = 0, second kind: [2 lam P_k + P_{k-1}; P_{k-2} - P_k; P_{k-3}; ...; P_0]"""
    _, m, n = C.shape
    M = np.zeros((2, k * m, n), dtype=complex)
    M[0, :m] = C[k - 1]
    M[1, :m] = 2.0 * C[k]
    if k >= 2:
        M[0, m:2 * m] = C[k - 2] - C[k]
    for r in range(2, k):
        M[0, r * m:(r + 1) * m] = C[k - 1 - r]
    return M


def _halved_column_body(C: np.ndarray, k: int) -> np.ndarray:
    """eps = 0, first kind: 1/2 [2 lam P_k + P_{k-1}; P_{k-2} - 2 P_k; ...; 2 P_0 - P_2]"""
    _, m, n = C.shape
    M = np.zeros((2, k * m, n), dtype=complex)
    for r in range(k):
        c_r = 2.0 if k - 1 - r == 0 else 1.0
        d_r = 0.0 if r == 0 else (2.0 if r == 1 else 1.0)
        entry = c_r * C[k - 1 - r]
        if d_r:
            entry = entry - d_r * C[k + 1 - r]
        M[0, r * m:(r + 1) * m] = 0.5 * entry
    M[1, :m] = C[k]
    return M


def colleague_body(P: MatrixPolynomial, eps: int) -> np.ndarray:
    """Body M of the colleague Chebyshev pencil for each of the four cases"""
    k = P.grade
    C = P.coeffs
    if eps == 0:
        return _halved_column_body(C, k) if P.kind is BasisKind.CHEBYSHEV1 else _column_body(C, k)
    if eps == k - 1:
        return _row_body(C, k)
    return _interior_body(C, k, eps)


def _linearization(P: MatrixPolynomial, eps: int, A, B) -> ChebLinearization:
    require_basis(P, BasisKind.CHEBYSHEV1, BasisKind.CHEBYSHEV2)
    k = P.grade
    check_grade_and_eps(k, eps)
    kind = P.kind.chebyshev_kind
    m, n = P.rows, P.cols
    K1, D1, K2, D2 = build_K_D_cheb(k, eps, (kind, 2), n, m)

    a_shape = ((k - eps) * m, eps * n)
    b_shape = ((k - 1 - eps) * m, (eps + 1) * n)
    A = np.zeros(a_shape, dtype=complex) if A is None else np.array(A, dtype=complex)
    B = np.zeros(b_shape, dtype=complex) if B is None else np.array(B, dtype=complex)
    if A.shape != a_shape:
        raise DimensionMismatchError(f"A must be {a_shape}, got {A.shape}")
    if B.shape != b_shape:
        raise DimensionMismatchError(f"B must be {b_shape}, got {B.shape}")

    M = colleague_body(P, eps)
    if A.size:
        M = M + arithmetic.matmul(A[np.newaxis], K1.coeffs)
    if B.size:
        M = M + arithmetic.matmul(arithmetic.transpose(K2.coeffs), B[np.newaxis])

    pencil = assemble(
        M, K1, K2,
        row_blocks=[m] * (k - eps) + [n] * eps,
        col_blocks=[n] * (eps + 1) + [m] * (k - 1 - eps),
        family=f"cheb{kind}", param=eps,
    )
    return ChebLinearization(pencil=pencil, eps=eps, kind=kind, A=A, B=B, source=P,
                             K1=K1, D1=D1, K2=K2, D2=D2)


def colleague_cheb(P: MatrixPolynomial, eps: int) -> ChebLinearization:
    """
    Colleague Chebyshev pencil of P

    A first-kind P pairs K1 of the first kind with K2 of the second kind;
    a second-kind P uses the second kind on both sides.

    Args:
        P: Matrix polynomial in a Chebyshev basis, grade k >= 1
        eps: Block parameter in [0, k-1]

    Returns:
        ChebLinearization with A = 0 and B = 0
    """
    return _linearization(P, eps, None, None)


def family_cheb(P: MatrixPolynomial, eps: int, A: Optional[np.ndarray] = None,
                B: Optional[np.ndarray] = None) -> ChebLinearization:
    """
    Chebyshev linearization with body M + A K1 + K2^T B

    Args:
        P: Matrix polynomial in a Chebyshev basis
        eps: Block parameter in [0, k-1]
        A: (k-eps)m x eps*n constant matrix
        B: (k-1-eps)m x (eps+1)n constant matrix

    Returns:
        ChebLinearization
    """
    return _linearization(P, eps, A, B)
