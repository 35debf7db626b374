"""
Eigenvector and minimal basis recovery from Lagrange linearizations
"""
import logging
from typing import List, Tuple

import numpy as np

from src.config import Tolerances, get_tolerances
from src.lagrange.linearization import LagrangeLinearization
from src.pencils.recovery import RecoveredVector, check_side, combine_minimal, node_hits, select_block
from src.polycore.matrix_polynomial import is_infinite
from src.polycore.vector_basis import PolyVectorBasis

logger = logging.getLogger(__name__)


def valid_blocks_lagrange(lin: LagrangeLinearization, lam0: complex, side: str,
                          tol: Tolerances = None) -> List[int]:
    """
    1-based blocks of a pencil eigenvector that are nonzero multiples of the eigenvector of P

    Right block c carries the D1 entry that omits gamma_{k+1-c} and gamma_{k-c}; it
    vanishes exactly when lam0 is one of the other nodes x_{mu+1}..x_{k+1}. Left
    blocks behave the same way over x_1..x_{mu+2}.

    Args:
        lin: Lagrange linearization
        lam0: Eigenvalue (finite or INFINITY)
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        Sorted list of valid blocks
    """
    tol = get_tolerances(tol)
    k, mu = lin.grade, lin.mu
    count = k - mu if side == "right" else mu + 1
    if is_infinite(lam0):
        return list(range(1, count + 1))
    hits = node_hits(lin.nodes.points, lam0, tol.node_match_tol)
    if not hits:
        return list(range(1, count + 1))

    valid = []
    for c in range(count):
        if side == "right":
            vanishing = set(range(mu + 1, k + 2)) - {k - c, k + 1 - c}
        else:
            vanishing = set(range(1, mu + 3)) - {mu + 2 - c, mu + 1 - c}
        if not hits & vanishing:
            valid.append(c + 1)
    logger.warning(f"Eigenvalue {lam0} coincides with node(s) {sorted(hits)}; {side} blocks {valid} remain reliable")
    return valid


def recover_eigvec_lagrange(lin: LagrangeLinearization, lam0: complex, vector: np.ndarray, side: str = "right",
                            tol: Tolerances = None) -> RecoveredVector:
    """
    Eigenvector of P from an eigenvector of a Lagrange linearization

    Away from the nodes (and at infinity) every block among the first k-mu
    (right) or mu+1 (left) works; at a node only the blocks whose D entry
    survives are used.

    Args:
        lin: Lagrange linearization
        lam0: Eigenvalue (finite or INFINITY)
        vector: Right eigenvector z, or left eigenvector w with w^T L(lam0) = 0
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        RecoveredVector built from the first valid block
    """
    check_side(side)
    tol = get_tolerances(tol)
    valid = valid_blocks_lagrange(lin, lam0, side, tol)
    blocks = lin.pencil.split_right(vector) if side == "right" else lin.pencil.split_left(vector)
    return select_block(blocks, valid[0], side, valid, tol)


def recover_minimal_lagrange(lin: LagrangeLinearization, basis: PolyVectorBasis, side: str = "right",
                             tol: Tolerances = None) -> Tuple[PolyVectorBasis, List[int]]:
    """
    Minimal basis and minimal indices of P from a minimal basis of the pencil nullspace

    Right vectors combine the first k-mu blocks with weights b_k..b_{mu+1};
    left vectors combine the first mu+1 blocks with weights a_{mu+1}..a_1.

    Args:
        lin: Lagrange linearization
        basis: Minimal basis of the pencil's right or left nullspace
        side: "right" or "left"
        tol: Tolerance record

    Returns:
        (basis of P, indices shifted by -(k-mu-1) on the right or -mu on the left)
    """
    check_side(side)
    k, mu = lin.grade, lin.mu
    if side == "right":
        sizes = lin.pencil.col_blocks
        weights = np.zeros(len(sizes), dtype=complex)
        weights[: k - mu] = lin.coords.b
        shift = k - mu - 1
    else:
        sizes = lin.pencil.row_blocks
        weights = np.zeros(len(sizes), dtype=complex)
        weights[: mu + 1] = lin.coords.a
        shift = mu
    return combine_minimal(basis, sizes, weights, shift, tol)
