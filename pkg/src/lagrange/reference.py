"""
Classical barycentric Lagrange pencil, used to cross-check the colleague pencil
"""
import numpy as np

from src.errors import ParameterRangeError
from src.pencils.block_pencil import BlockPencil
from src.polycore.basis import BasisKind
from src.polycore.matrix_polynomial import MatrixPolynomial, require_basis


def reference_pencil_lagrange(P: MatrixPolynomial) -> BlockPencil:
    """
    Pencil with top block row carrying the samples and a bidiagonal identity part

    With 0-based nodes x_0..x_k, gamma_s = lam - x_s and theta_s = w_{s-1}/w_s:
    the top row is [-gamma_1 P_0, ..., -gamma_{k-1} P_{k-2},
    -gamma_k P_{k-1} - gamma_{k-1} (w_k/w_{k-1}) P_k] and block row s
    (1 <= s <= k-1) holds -gamma_{s-1} I in column s-1 and
    gamma_{s+1} theta_s I in column s.

    Args:
        P: Lagrange matrix polynomial of grade k >= 1

    Returns:
        BlockPencil of family "generic"
    """
    require_basis(P, BasisKind.LAGRANGE)
    k = P.grade
    if k < 1:
        raise ParameterRangeError(f"The reference pencil needs grade k >= 1, got {k}")
    m, n = P.rows, P.cols
    x = P.nodes.points
    w = P.nodes.weights
    C = P.coeffs
    eye = np.eye(n)

    rows, cols = m + (k - 1) * n, k * n
    L0 = np.zeros((rows, cols), dtype=complex)
    L1 = np.zeros((rows, cols), dtype=complex)

    def put(r0, r1, c, const, lin):
        L0[r0:r1, c * n:(c + 1) * n] += const
        L1[r0:r1, c * n:(c + 1) * n] += lin

    # -gamma_{s+1} P_s = x_{s+1} P_s - lam P_s
    for s in range(k - 1):
        put(0, m, s, x[s + 1] * C[s], -C[s])
    ratio = w[k] / w[k - 1]
    put(0, m, k - 1, x[k] * C[k - 1] + x[k - 1] * ratio * C[k], -C[k - 1] - ratio * C[k])

    for s in range(1, k):
        r0 = m + (s - 1) * n
        theta = w[s - 1] / w[s]
        put(r0, r0 + n, s - 1, x[s - 1] * eye, -eye)
        put(r0, r0 + n, s, -x[s + 1] * theta * eye, theta * eye)

    return BlockPencil(L0=L0, L1=L1, row_blocks=(m,) + (n,) * (k - 1), col_blocks=(n,) * k, family="generic")
