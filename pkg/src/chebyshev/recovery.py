"""
Eigenvector and minimal basis recovery from Chebyshev linearizations
"""
import logging
from typing import List, Tuple

import numpy as np

from src.chebyshev.linearization import ChebLinearization
from src.config import Tolerances, get_tolerances
from src.pencils.recovery import RecoveredVector, check_side, combine_minimal, select_block
from src.polycore.basis import chebyshev_values
from src.polycore.matrix_polynomial import is_infinite
from src.polycore.vector_basis import PolyVectorBasis

logger = logging.getLogger(__name__)


def valid_blocks_cheb(lin: ChebLinearization, lam0: complex, side: str, tol: Tolerances = None) -> List[int]:
    """
    1-based blocks that are nonzero multiples of the eigenvector of P

    Right block c carries phi_{eps+1-c}(lam0) and left block r carries
    U_{k-eps-r}(lam0); blocks whose value vanishes are dropped.

    Args:
        lin: Chebyshev linearization
        lam0: Eigenvalue (finite or INFINITY)
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        Sorted list of valid blocks
    """
    tol = get_tolerances(tol)
    if is_infinite(lam0):
        return [1]
    if side == "right":
        top, kind = lin.eps, lin.kind
    else:
        top, kind = lin.grade - 1 - lin.eps, 2
    values = np.abs(chebyshev_values(top, lam0, kind))[::-1]
    cutoff = tol.node_match_tol * values.max()
    return [c + 1 for c in range(top + 1) if values[c] > cutoff]


def recover_eigvec_cheb(lin: ChebLinearization, lam0: complex, vector: np.ndarray, side: str = "right",
                        tol: Tolerances = None) -> RecoveredVector:
    """
    Eigenvector of P from an eigenvector of a Chebyshev linearization

    Args:
        lin: Chebyshev linearization
        lam0: Eigenvalue (finite or INFINITY)
        vector: Right eigenvector z, or left eigenvector w with w^T L(lam0) = 0
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        RecoveredVector: block eps+1 (right) or k-eps (left) for finite lam0, block 1 at infinity
    """
    check_side(side)
    tol = get_tolerances(tol)
    k, eps = lin.grade, lin.eps
    if is_infinite(lam0):
        block = 1
    else:
        block = eps + 1 if side == "right" else k - eps
    blocks = lin.pencil.split_right(vector) if side == "right" else lin.pencil.split_left(vector)
    return select_block(blocks, block, side, valid_blocks_cheb(lin, lam0, side, tol), tol)


def recover_minimal_cheb(lin: ChebLinearization, basis: PolyVectorBasis, side: str = "right",
                         tol: Tolerances = None) -> Tuple[PolyVectorBasis, List[int]]:
    """
    Minimal basis and minimal indices of P from a minimal basis of the pencil nullspace

    Args:
        lin: Chebyshev linearization
        basis: Minimal basis of the pencil's right or left nullspace
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        (basis of P, indices shifted by -eps on the right or -(k-1-eps) on the left)
    """
    check_side(side)
    k, eps = lin.grade, lin.eps
    if side == "right":
        sizes = lin.pencil.col_blocks
        position = eps
    else:
        sizes = lin.pencil.row_blocks
        position = k - 1 - eps
    weights = np.zeros(len(sizes))
    weights[position] = 1.0
    return combine_minimal(basis, sizes, weights, position, tol)
