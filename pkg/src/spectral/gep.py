"""
Dense generalized eigenvalue backend
"""
import logging

import numpy as np
from scipy import linalg

from src.config import Tolerances, get_tolerances
from src.errors import DimensionMismatchError, EigenSolverError
from src.polycore.matrix_polynomial import INFINITY
from src.spectral.types import GEPResult

logger = logging.getLogger(__name__)


def solve_gep(L0: np.ndarray, L1: np.ndarray, want_left: bool = False, tol: Tolerances = None) -> GEPResult:
    """
    Eigenvalues and eigenvectors of lam*L1 + L0 through QZ

    The problem is handed to scipy as -L0 v = lam L1 v with homogeneous
    eigenvalues, so infinite eigenvalues come back as beta ~ 0.

    Args:
        L0: Constant coefficient (square)
        L1: Linear coefficient (same size)
        want_left: Also return left eigenvectors
        tol: Tolerance record

    Returns:
        GEPResult; left columns satisfy w^T L(lam) = 0
    """
    tol = get_tolerances(tol)
    L0 = np.asarray(L0, dtype=complex)
    L1 = np.asarray(L1, dtype=complex)
    if L0.ndim != 2 or L0.shape[0] != L0.shape[1] or L0.shape != L1.shape:
        raise DimensionMismatchError(f"GEP needs square matrices of equal size, got {L0.shape} and {L1.shape}")

    try:
        if want_left:
            w, vl, vr = linalg.eig(-L0, L1, left=True, right=True, homogeneous_eigvals=True)
        else:
            w, vr = linalg.eig(-L0, L1, homogeneous_eigvals=True)
            vl = None
    except (linalg.LinAlgError, ValueError) as e:
        raise EigenSolverError(f"QZ iteration failed: {str(e)}") from e

    alpha, beta = w[0], w[1]
    size = np.hypot(np.abs(alpha), np.abs(beta))
    scale = max(np.linalg.norm(L0), np.linalg.norm(L1), 1.0)
    indeterminate = size <= tol.infinity_tol * scale
    infinite = np.abs(beta) <= tol.infinity_tol * size

    eigenvalues = np.empty(len(alpha), dtype=complex)
    eigenvalues[infinite] = INFINITY
    eigenvalues[~infinite] = alpha[~infinite] / beta[~infinite]
    if np.any(indeterminate):
        logger.warning(f"{int(np.sum(indeterminate))} indeterminate eigenvalue(s) (alpha ~ beta ~ 0)")
    logger.debug(f"GEP of size {L0.shape[0]}: {int(np.sum(~infinite))} finite, {int(np.sum(infinite))} infinite")

    return GEPResult(
        alpha=alpha, beta=beta, eigenvalues=eigenvalues, right=vr,
        left=None if vl is None else np.conj(vl), indeterminate=indeterminate,
    )
