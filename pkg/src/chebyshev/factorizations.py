"""
Chebyshev-Horner shifts and one-sided factorizations
"""
from typing import Optional, Tuple

import numpy as np

from src.chebyshev.linearization import check_grade_and_eps, check_kind, d_blocks
from src.errors import ParameterRangeError
from src.polycore import arithmetic
from src.polycore.basis import BasisKind, chebyshev_monomial, chebyshev_value
from src.polycore.matrix_polynomial import MatrixPolynomial, require_basis


def _resolve_kind(P: MatrixPolynomial, kind: Optional[int]) -> int:
    require_basis(P, BasisKind.CHEBYSHEV1, BasisKind.CHEBYSHEV2)
    kind = P.kind.chebyshev_kind if kind is None else kind
    check_kind(kind)
    return kind


def _check_shift(k: int, eps: int, i: int):
    if eps < 0 or not 0 <= i <= k - eps:
        raise ParameterRangeError(f"Chebyshev shift needs 0 <= i <= k - eps, got eps={eps}, i={i}, k={k}")


def phi_monomial(j: int, kind: int) -> np.ndarray:
    """Monomial coefficients of phi_j for any integer j (T_{-j} = T_j, U_{-1} = 0, U_{-j} = -U_{j-2})"""
    if j >= 0:
        return chebyshev_monomial(j, kind)
    if kind == 1:
        return chebyshev_monomial(-j, kind)
    if j == -1:
        return np.zeros(1, dtype=complex)
    return -chebyshev_monomial(-j - 2, kind)


def cheb_horner(P: MatrixPolynomial, eps: int, i: int, lam: complex, kind: Optional[int] = None) -> np.ndarray:
    """
    Shift P^i_eps(lam) = sum_{t=0}^{i} P_{k-t} phi_{eps+i-t}(lam) by the recurrence

    P^0_e = P_k phi_e,  P^{s+1}_e = 2 lam P^s_e - P^s_{e-1} + P_{k-s-1} phi_e

    Args:
        P: Chebyshev matrix polynomial of grade k
        eps: Base index (>= 0)
        i: Shift index in [0, k - eps]
        lam: Evaluation point
        kind: 1 or 2; defaults to the kind of P

    Returns:
        m x n matrix
    """
    kind = _resolve_kind(P, kind)
    k = P.grade
    _check_shift(k, eps, i)
    C = P.coeffs
    # the recurrence at step s needs base indices down to eps - i + s
    indices = range(eps - i, eps + 1)
    phi = {e: chebyshev_value(e, lam, kind) for e in indices}
    cur = {e: C[k] * phi[e] for e in indices}
    for s in range(i):
        cur = {e: 2 * lam * cur[e] - cur[e - 1] + C[k - s - 1] * phi[e]
               for e in range(eps - i + s + 1, eps + 1)}
    return np.array(cur[eps], dtype=complex)


def cheb_horner_direct(P: MatrixPolynomial, eps: int, i: int, lam: complex, kind: Optional[int] = None) -> np.ndarray:
    """P^i_eps(lam) summed term by term"""
    kind = _resolve_kind(P, kind)
    k = P.grade
    _check_shift(k, eps, i)
    acc = np.zeros(P.coeffs.shape[1:], dtype=complex)
    for t in range(i + 1):
        acc = acc + chebyshev_value(eps + i - t, lam, kind) * P.coeffs[k - t]
    return acc


def cheb_horner_polynomial(P: MatrixPolynomial, eps: int, i: int, kind: Optional[int] = None) -> np.ndarray:
    """Monomial coefficient stack of P^i_eps"""
    kind = _resolve_kind(P, kind)
    k = P.grade
    _check_shift(k, eps, i)
    acc = np.zeros((1,) + P.coeffs.shape[1:], dtype=complex)
    for t in range(i + 1):
        acc = arithmetic.add(acc, arithmetic.scalar_times(phi_monomial(eps + i - t, kind), P.coeffs[k - t][np.newaxis]))
    return acc


def one_sided_cheb(P: MatrixPolynomial, eps: int) -> Tuple[MatrixPolynomial, MatrixPolynomial, int, int]:
    """
    Right and left factors with L H = e_{k-eps} (x) P and G L = e_{eps+1}^T (x) P

    Args:
        P: Chebyshev matrix polynomial of grade k
        eps: Block parameter in [0, k-1]

    Returns:
        (H, G, k - eps, eps + 1) with H and G as monomial matrix polynomials
    """
    kind = _resolve_kind(P, None)
    k = P.grade
    check_grade_and_eps(k, eps)
    m, n = P.rows, P.cols
    C = P.coeffs

    if eps == 0 and kind == 1:
        # H = [I; -P^j_{0,1} + P_{k-j}/2]
        upper = [np.eye(n, dtype=complex)[np.newaxis]]
        lower = [arithmetic.add(-cheb_horner_polynomial(P, 0, j), 0.5 * C[k - j][np.newaxis]) for j in range(1, k)]
    else:
        # H = [D1^T; -P^1_eps; ...; -P^{k-eps-1}_eps]
        D1 = d_blocks(eps, n, kind)
        upper = [D1[:, :, c * n:(c + 1) * n] for c in range(eps + 1)]
        lower = [-cheb_horner_polynomial(P, eps, j) for j in range(1, k - eps)]
    H = arithmetic.block_matrix([[b] for b in upper + lower], [n] * (eps + 1) + [m] * (k - 1 - eps), [n])

    # G = [D2; -P^{k-eps}_0; ...; -P^{k-1}_0], always second kind
    D2 = d_blocks(k - 1 - eps, m, 2)
    right = [-cheb_horner_polynomial(P, 0, j, kind=2) for j in range(k - eps, k)]
    G = arithmetic.block_matrix([[D2] + right], [m], [(k - eps) * m] + [n] * eps)

    return MatrixPolynomial.monomial(H), MatrixPolynomial.monomial(G), k - eps, eps + 1
