"""
Shared helpers for recovering eigenvectors and minimal bases from pencil blocks
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

import numpy as np

from src.config import DEFAULT_SEED, Tolerances, get_tolerances
from src.errors import ParameterRangeError, RecoveryError
from src.polycore.vector_basis import SIDES, PolyVectorBasis, from_vectors

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RecoveredVector:
    """Eigenvector of P read off a block of a pencil eigenvector"""

    vector: np.ndarray
    side: str
    block: int
    valid_blocks: Tuple[int, ...]
    unreliable_blocks: Tuple[int, ...] = ()

    def __array__(self, dtype=None):
        return self.vector if dtype is None else self.vector.astype(dtype)


def check_side(side: str):
    if side not in SIDES:
        raise ParameterRangeError(f"side must be one of {SIDES}, got {side!r}")


def node_hits(points: Sequence[complex], lam: complex, tol: float) -> Set[int]:
    """
    1-based indices of the nodes that lam coincides with

    Args:
        points: Node values
        lam: Finite eigenvalue
        tol: Relative match tolerance

    Returns:
        Set of matching indices (empty when lam avoids all nodes)
    """
    points = np.asarray(points, dtype=complex)
    if points.size == 0:
        return set()
    close = np.abs(lam - points) <= tol * (1.0 + np.abs(points))
    return {int(i) + 1 for i in np.nonzero(close)[0]}


def select_block(blocks: List[np.ndarray], block: int, side: str, valid: Iterable[int],
                 tol: Tolerances = None) -> RecoveredVector:
    """
    Pick one block of a pencil eigenvector and annotate the others

    Args:
        blocks: Split eigenvector of the pencil
        block: 1-based block to return
        side: "right" or "left"
        valid: 1-based blocks that are nonzero multiples of the eigenvector
        tol: Tolerance record

    Returns:
        RecoveredVector
    """
    tol = get_tolerances(tol)
    valid = tuple(sorted(set(valid) | {block}))
    total = np.sqrt(sum(np.linalg.norm(b) ** 2 for b in blocks))
    x = np.array(blocks[block - 1], dtype=complex)
    if total == 0 or np.linalg.norm(x) <= tol.rank_rtol * total:
        raise RecoveryError(f"Recovered {side} block {block} is zero; the pencil vector is not an eigenvector")
    unreliable = tuple(i for i in range(1, len(blocks) + 1) if i not in valid)
    return RecoveredVector(vector=x, side=side, block=block, valid_blocks=valid, unreliable_blocks=unreliable)


def combine_minimal(basis: PolyVectorBasis, sizes: Sequence[int], weights: Sequence[complex], shift: int,
                    tol: Tolerances = None, seed: int = None) -> Tuple[PolyVectorBasis, List[int]]:
    """
    Map a minimal basis of a pencil nullspace to one of the polynomial

    Each output vector is sum_c weights[c] * block_c of the input vector.

    Args:
        basis: Minimal basis of the pencil's left or right nullspace
        sizes: Block sizes along the vector
        weights: One scalar per block (0 for unused blocks)
        shift: Amount subtracted from every degree
        tol: Tolerance record
        seed: Seed of the independence probe

    Returns:
        (recovered basis, shifted indices)
    """
    tol = get_tolerances(tol)
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    if basis.size not in (0, offsets[-1]):
        raise ParameterRangeError(f"Basis vectors have length {basis.size}, pencil side has {offsets[-1]}")
    width = sizes[0] if sizes else 0

    recovered = []
    for v in basis.vectors:
        acc = np.zeros((v.shape[0], width), dtype=complex)
        for c, w in enumerate(weights):
            if w != 0:
                acc = acc + w * v[:, offsets[c]: offsets[c + 1]]
        recovered.append(acc)
    indices = [d - shift for d in basis.degrees]
    if any(i < 0 for i in indices):
        raise RecoveryError(f"Pencil indices {list(basis.degrees)} are too small for a shift of {shift}")

    result = from_vectors(recovered, basis.side, basis.certificate, tol=tol.nullspace_rtol)
    if recovered:
        rng = np.random.default_rng(DEFAULT_SEED if seed is None else seed)
        lam = complex(rng.standard_normal(), rng.standard_normal())
        values = result.evaluate(lam)
        s = np.linalg.svd(values, compute_uv=False)
        if s[0] == 0 or np.sum(s > tol.candidate_rank_rtol * s[0]) < len(recovered):
            raise RecoveryError("Recovered vectors are linearly dependent; the input basis is not minimal")
    logger.info(f"Recovered {len(recovered)} {basis.side} minimal indices {indices} (shift {shift})")
    return result, indices
