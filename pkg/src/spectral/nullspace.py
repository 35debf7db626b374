"""
Numerical minimal bases of rational nullspaces
"""
import logging
import warnings
from typing import List, Union

import numpy as np
from scipy import linalg

from src.config import DEFAULT_SEED, Tolerances, get_tolerances
from src.errors import RankAmbiguityWarning, RecoveryError
from src.pencils.block_pencil import BlockPencil
from src.pencils.recovery import check_side
from src.polycore import arithmetic
from src.polycore.matrix_polynomial import MatrixPolynomial, to_monomial
from src.polycore.vector_basis import PolyVectorBasis

logger = logging.getLogger(__name__)

Target = Union[BlockPencil, MatrixPolynomial]


def _monomial_stack(target: Target, side: str) -> np.ndarray:
    if isinstance(target, BlockPencil):
        stack = target.stack()
    else:
        stack = to_monomial(target).coeffs
    stack = arithmetic.trim(np.asarray(stack, dtype=complex))
    return arithmetic.transpose(stack) if side == "left" else stack


def _rank(matrix: np.ndarray, rtol: float) -> int:
    if matrix.size == 0:
        return 0
    s = linalg.svd(matrix, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rtol * max(matrix.shape) * s[0]))


def normal_rank(target: Target, tol: Tolerances = None, seed: int = None) -> int:
    """
    Rank over the field of rational functions, estimated at random points

    Args:
        target: Pencil or matrix polynomial
        tol: Tolerance record (random_probes, rank_rtol)
        seed: Seed of the probe points

    Returns:
        Largest rank seen over the probes
    """
    tol = get_tolerances(tol)
    rng = np.random.default_rng(DEFAULT_SEED if seed is None else seed)
    stack = _monomial_stack(target, "right")
    points = rng.standard_normal(tol.random_probes) + 1j * rng.standard_normal(tol.random_probes)
    return max(_rank(arithmetic.evaluate(stack, z), tol.rank_rtol) for z in points)


def convolution_matrix(stack: np.ndarray, d: int) -> np.ndarray:
    """
    Block Toeplitz matrix sending the coefficients of a degree-d vector v to those of L v

    Args:
        stack: Monomial coefficients L_0..L_deg, shape (deg + 1, rows, cols)
        d: Degree of v

    Returns:
        Matrix of size (deg + d + 1) rows x (d + 1) cols, in blocks
    """
    length, rows, cols = stack.shape
    out = np.zeros(((length + d) * rows, (d + 1) * cols), dtype=complex)
    for j in range(d + 1):
        for i in range(length):
            s = i + j
            out[s * rows:(s + 1) * rows, j * cols:(j + 1) * cols] = stack[i]
    return out


def _embedded(vectors: List[np.ndarray], d: int, size: int) -> np.ndarray:
    """Columns lam^s v for every found v and every shift keeping the degree <= d"""
    cols = []
    for v in vectors:
        e = v.shape[0] - 1
        for s in range(d - e + 1):
            col = np.zeros((d + 1) * size, dtype=complex)
            col[s * size:(s + e + 1) * size] = v.ravel()
            cols.append(col)
    if not cols:
        return np.zeros(((d + 1) * size, 0), dtype=complex)
    return np.column_stack(cols)


def _null_directions(T: np.ndarray, tol: Tolerances, d: int) -> np.ndarray:
    """Orthonormal basis of the numerical null space of T, warning on borderline singular values"""
    _, s, vh = linalg.svd(T, full_matrices=True)
    cols = T.shape[1]
    sigma_max = s[0] if s.size else 0.0
    if sigma_max == 0.0:
        return np.eye(cols, dtype=complex)
    full = np.zeros(cols)
    full[: s.size] = s
    cutoff = tol.nullspace_rtol * sigma_max
    strict = int(np.sum(full <= cutoff / tol.ambiguity_band))
    loose = int(np.sum(full <= cutoff * tol.ambiguity_band))
    if strict != loose:
        message = (f"Rank decision at degree {d} is ambiguous: nullity {strict} at tol/{tol.ambiguity_band:g}, "
                   f"{loose} at tol*{tol.ambiguity_band:g}")
        logger.warning(message)
        warnings.warn(message, RankAmbiguityWarning)
    keep = full <= cutoff
    return vh.conj().T[:, keep]


def nullspace_minimal_basis(target: Target, side: str = "right", tol: Tolerances = None, seed: int = None,
                            max_degree: int = None) -> PolyVectorBasis:
    """
    Minimal basis of the right or left rational nullspace by a degree sweep

    For d = 0, 1, ... the null space of the degree-d convolution matrix is
    computed; directions already spanned by lam-shifts of earlier vectors are
    deflated, and what remains are the new basis vectors of degree d.

    Args:
        target: Pencil or matrix polynomial
        side: "right" (L v = 0) or "left" (w^T L = 0)
        tol: Tolerance record
        seed: Seed of the normal rank probes
        max_degree: Largest degree to try; defaults to deg * rank

    Returns:
        PolyVectorBasis sorted by degree (empty when the nullspace is trivial)
    """
    check_side(side)
    tol = get_tolerances(tol)
    stack = _monomial_stack(target, side)
    size = stack.shape[2]
    rank = normal_rank(target, tol, seed)
    nullity = size - rank
    logger.info(f"{side} nullity {nullity} (normal rank {rank}, size {size})")
    if nullity <= 0:
        return PolyVectorBasis((), (), side, "probabilistic")

    deg = stack.shape[0] - 1
    limit = max_degree if max_degree is not None else max(deg * rank, 0)
    found: List[np.ndarray] = []
    degrees: List[int] = []
    for d in range(limit + 1):
        null = _null_directions(convolution_matrix(stack, d), tol, d)
        old = _embedded(found, d, size)
        if old.shape[1]:
            q, _ = linalg.qr(old, mode="economic")
            null = null - q @ (q.conj().T @ null)
        count = min(null.shape[1] - old.shape[1], nullity - len(found))
        logger.debug(f"Degree {d}: {null.shape[1]} null directions, {old.shape[1]} already spanned")
        if count > 0:
            u, _, _ = linalg.svd(null, full_matrices=False)
            for c in range(count):
                v = u[:, c].reshape(d + 1, size)
                found.append(v / np.abs(v).max())
                degrees.append(d)
        if len(found) >= nullity:
            break

    if len(found) < nullity:
        raise RecoveryError(f"Found {len(found)} of {nullity} {side} null vectors up to degree {limit}")
    logger.info(f"{side} minimal indices {degrees}")
    return PolyVectorBasis(tuple(found), tuple(degrees), side, "probabilistic")
