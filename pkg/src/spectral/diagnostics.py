"""
Residuals, chordal comparisons and the companion oracle
"""
import logging
from typing import Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from src.config import Tolerances, get_tolerances
from src.errors import BackwardErrorUndefinedError, DimensionMismatchError, ParameterRangeError
from src.pencils.recovery import check_side
from src.polycore import arithmetic
from src.polycore.matrix_polynomial import (
    MatrixPolynomial,
    basis_values,
    evaluate,
    is_infinite,
    reverse,
    to_monomial,
)
from src.spectral.gep import solve_gep

logger = logging.getLogger(__name__)


def backward_error(P: MatrixPolynomial, lam: complex, x: np.ndarray, side: str = "right") -> float:
    """
    Normwise backward error ||P(lam) x|| / (sum ||P_i|| |phi_i(lam)| ||x||)

    At INFINITY the reversal is used: ||rev P(0) x|| / (sum ||P_i|| ||x||).

    Args:
        P: Matrix polynomial in any basis
        lam: Eigenvalue (finite or INFINITY)
        x: Nonzero right vector, or left vector with x^T P(lam)
        side: "right" or "left"

    Returns:
        The backward error (>= 0)
    """
    check_side(side)
    x = np.ravel(np.asarray(x, dtype=complex))
    expected = P.cols if side == "right" else P.rows
    if x.size != expected:
        raise DimensionMismatchError(f"{side} vector needs length {expected}, got {x.size}")
    x_norm = np.linalg.norm(x)
    if x_norm == 0:
        raise ParameterRangeError("Backward error needs a nonzero vector")

    norms = np.array([np.linalg.norm(c, 2) for c in P.coeffs])
    if is_infinite(lam):
        value = reverse(P).coeffs[0]
        weights = np.ones_like(norms)
    else:
        value = evaluate(P, lam)
        weights = np.abs(basis_values(P, lam))
    denominator = float(np.dot(norms, weights)) * x_norm
    if denominator == 0:
        raise BackwardErrorUndefinedError(f"All weighted coefficient norms vanish at {lam}")
    residual = value @ x if side == "right" else x @ value
    return float(np.linalg.norm(residual) / denominator)


def chordal_distance(a: complex, b: complex) -> float:
    """
    Distance on the Riemann sphere, |a - b| / (sqrt(1 + |a|^2) sqrt(1 + |b|^2))

    Args:
        a: Complex number or INFINITY
        b: Complex number or INFINITY

    Returns:
        Distance in [0, 1]
    """
    a_inf, b_inf = is_infinite(a), is_infinite(b)
    if a_inf and b_inf:
        return 0.0
    if a_inf:
        return float(1.0 / np.sqrt(1.0 + abs(b) ** 2))
    if b_inf:
        return float(1.0 / np.sqrt(1.0 + abs(a) ** 2))
    return float(abs(a - b) / (np.sqrt(1.0 + abs(a) ** 2) * np.sqrt(1.0 + abs(b) ** 2)))


def match_spectra(first, second, tol: Tolerances = None) -> Tuple[bool, float]:
    """
    Compare two eigenvalue multisets by optimal chordal assignment

    Args:
        first: Eigenvalues (may contain INFINITY)
        second: Eigenvalues (may contain INFINITY)
        tol: Tolerance record (eig_match_tol)

    Returns:
        (match flag, largest matched distance); sizes that differ never match
    """
    tol = get_tolerances(tol)
    first = np.ravel(np.asarray(first, dtype=complex))
    second = np.ravel(np.asarray(second, dtype=complex))
    if first.size != second.size:
        logger.info(f"Spectra differ in size: {first.size} vs {second.size}")
        return False, float("inf")
    if first.size == 0:
        return True, 0.0
    cost = np.array([[chordal_distance(a, b) for b in second] for a in first])
    rows, cols = linear_sum_assignment(cost)
    worst = float(cost[rows, cols].max())
    return worst <= tol.eig_match_tol, worst


def _companion_spectrum(stack: np.ndarray, tol: Tolerances) -> np.ndarray:
    L0, L1 = arithmetic.companion_pencil(stack)
    return solve_gep(L0, L1, tol=tol).eigenvalues


def monomial_oracle_spectrum(P: MatrixPolynomial, tol: Tolerances = None) -> np.ndarray:
    """
    Eigenvalues of P from the Frobenius companion pencil of its monomial form

    Args:
        P: Square matrix polynomial of grade >= 1
        tol: Tolerance record

    Returns:
        k*n eigenvalues, INFINITY included
    """
    tol = get_tolerances(tol)
    return _companion_spectrum(to_monomial(P).coeffs, tol)


def reversal_infinite_count(P: MatrixPolynomial, tol: Tolerances = None) -> int:
    """
    Number of infinite eigenvalues of P, counted as zero eigenvalues of rev P

    Args:
        P: Square matrix polynomial of grade >= 1
        tol: Tolerance record

    Returns:
        Algebraic count
    """
    tol = get_tolerances(tol)
    L0, L1 = arithmetic.companion_pencil(reverse(P).coeffs)
    result = solve_gep(L0, L1, tol=tol)
    size = np.hypot(np.abs(result.alpha), np.abs(result.beta))
    return int(np.sum(np.abs(result.alpha) <= tol.infinity_tol * size))
