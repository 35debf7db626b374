"""
Eigenvector and minimal basis recovery from Newton linearizations
"""
import logging
from typing import List, Tuple

import numpy as np

from src.config import Tolerances, get_tolerances
from src.newton.linearization import NewtonLinearization
from src.pencils.recovery import RecoveredVector, check_side, combine_minimal, node_hits, select_block
from src.polycore.matrix_polynomial import is_infinite
from src.polycore.vector_basis import PolyVectorBasis

logger = logging.getLogger(__name__)


def _valid_blocks(lin: NewtonLinearization, lam0: complex, side: str, tol: Tolerances) -> List[int]:
    """1-based blocks whose D-entry does not vanish at lam0"""
    k, mu = lin.grade, lin.mu
    if is_infinite(lam0):
        return [1]
    hits = node_hits(lin.points, lam0, tol.node_match_tol)
    if side == "right":
        # block c carries n_{mu+1}^{k-1-c}
        blocks = [c + 1 for c in range(k - mu) if not hits & set(range(mu + 1, k - c))]
    else:
        # block r carries n_1^{mu-r}
        blocks = [r + 1 for r in range(mu + 1) if not hits & set(range(1, mu - r + 1))]
    if hits:
        logger.warning(f"Eigenvalue {lam0} coincides with Newton node(s) {sorted(hits)}; "
                       f"{side} blocks {blocks} remain reliable")
    return blocks


def recover_eigvec_newton(lin: NewtonLinearization, lam0: complex, vector: np.ndarray, side: str = "right",
                          tol: Tolerances = None) -> RecoveredVector:
    """
    Eigenvector of P from an eigenvector of a Newton linearization

    Args:
        lin: Newton linearization
        lam0: Eigenvalue (finite or INFINITY)
        vector: Right eigenvector z, or left eigenvector w with w^T L(lam0) = 0
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        RecoveredVector: block k-mu (right) or mu+1 (left) for finite lam0, block 1 at infinity
    """
    check_side(side)
    tol = get_tolerances(tol)
    k, mu = lin.grade, lin.mu
    if is_infinite(lam0):
        block = 1
    else:
        block = k - mu if side == "right" else mu + 1
    blocks = lin.pencil.split_right(vector) if side == "right" else lin.pencil.split_left(vector)
    return select_block(blocks, block, side, _valid_blocks(lin, lam0, side, tol), tol)


def recover_minimal_newton(lin: NewtonLinearization, basis: PolyVectorBasis, side: str = "right",
                           tol: Tolerances = None) -> Tuple[PolyVectorBasis, List[int]]:
    """
    Minimal basis and minimal indices of P from a minimal basis of the pencil nullspace

    Args:
        lin: Newton linearization
        basis: Minimal basis of the pencil's right or left nullspace
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        (basis of P, indices shifted by -(k-mu-1) on the right or -mu on the left)
    """
    check_side(side)
    k, mu = lin.grade, lin.mu
    pencil = lin.pencil
    if side == "right":
        sizes = pencil.col_blocks
        weights = np.zeros(len(sizes))
        weights[k - mu - 1] = 1.0
        shift = k - mu - 1
    else:
        sizes = pencil.row_blocks
        weights = np.zeros(len(sizes))
        weights[mu] = 1.0
        shift = mu
    return combine_minimal(basis, sizes, weights, shift, tol)
