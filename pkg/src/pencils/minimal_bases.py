"""
Dual minimal bases: duality checks, minimality certificates and the body product
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg

from src.config import DEFAULT_SEED, Tolerances, get_tolerances
from src.errors import DimensionMismatchError
from src.polycore import arithmetic
from src.polycore.basis import NodeSet
from src.polycore.matrix_polynomial import MatrixPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualPair:
    """K(lam) D(lam)^T = 0, both stored as monomial matrix polynomials"""

    K: MatrixPolynomial
    D: MatrixPolynomial
    basis: str
    param: int
    block_size: int
    nodes: Optional[NodeSet] = None

    @property
    def radius(self) -> float:
        """Radius of the sampling disk, 1 + max |x_i|"""
        if self.nodes is None or len(self.nodes) == 0:
            return 2.0
        return 1.0 + float(np.max(np.abs(self.nodes.points)))


@dataclass(frozen=True)
class MinimalityCertificate:
    """Outcome of is_minimal_basis; truthy iff the basis is minimal"""

    is_minimal: bool
    kind: str
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_minimal


def _stack(q) -> np.ndarray:
    return q.coeffs if isinstance(q, MatrixPolynomial) else arithmetic.as_stack(q)


def sample_points(count: int, radius: float) -> np.ndarray:
    """
    Chebyshev-distributed points on a tilted diameter of the disk |z| <= radius

    Args:
        count: Number of points
        radius: Disk radius

    Returns:
        Complex array of distinct points
    """
    theta = (2 * np.arange(count) + 1) * np.pi / (2 * count)
    return radius * np.cos(theta) * np.exp(0.7j)


def duality_defect(pair: DualPair) -> float:
    """
    Largest scaled defect |K(z) D(z)^T| / (1 + |K(z)| |D(z)|) over the sample points

    Args:
        pair: Dual pair

    Returns:
        Measured maximum (0.0 when K or D is empty)
    """
    K, D = _stack(pair.K), _stack(pair.D)
    if K.shape[2] != D.shape[2]:
        raise DimensionMismatchError(f"K has {K.shape[2]} columns but D has {D.shape[2]}")
    if K.shape[1] == 0 or D.shape[1] == 0:
        return 0.0

    count = max(arithmetic.degree(K), 0) + max(arithmetic.degree(D), 0) + 1
    worst = 0.0
    for z in sample_points(count, pair.radius):
        Kz, Dz = arithmetic.evaluate(K, z), arithmetic.evaluate(D, z)
        scale = 1.0 + np.linalg.norm(Kz, 2) * np.linalg.norm(Dz, 2)
        worst = max(worst, float(np.linalg.norm(Kz @ Dz.T, 2) / scale))
    return worst


def check_duality(pair: DualPair, tol: Tolerances = None) -> bool:
    """
    Check that K(lam) D(lam)^T vanishes identically

    Args:
        pair: Dual pair
        tol: Tolerance record

    Returns:
        True when the defect stays below DUALITY_TOL
    """
    tol = get_tolerances(tol)
    defect = duality_defect(pair)
    logger.debug(f"Duality defect of the {pair.basis} pair (param {pair.param}): {defect:.3e}")
    return defect <= tol.duality_tol


def _full_row_rank(matrix: np.ndarray, rtol: float, scale: float = 0.0) -> bool:
    rows = matrix.shape[0]
    if rows == 0:
        return True
    s = linalg.svd(matrix, compute_uv=False)
    reference = max(s[0] if s.size else 0.0, scale)
    if reference == 0.0:
        return False
    return int(np.sum(s > rtol * reference)) >= rows


def is_minimal_basis(Q, tol: Tolerances = None, seed: int = None) -> MinimalityCertificate:
    """
    Decide whether the rows of Q(lam) form a minimal basis

    Q is minimal iff its highest-row-degree coefficient has full row rank
    and Q(lam0) has full row rank at every finite lam0.

    Args:
        Q: Monomial matrix polynomial or coefficient stack with rows <= cols
        tol: Tolerance record
        seed: Seed of the random probes

    Returns:
        MinimalityCertificate
    """
    tol = get_tolerances(tol)
    rng = np.random.default_rng(DEFAULT_SEED if seed is None else seed)
    stack = _stack(Q)
    _, rows, cols = stack.shape

    if rows == 0:
        return MinimalityCertificate(True, "deterministic", "empty basis")
    if rows > cols:
        return MinimalityCertificate(False, "deterministic", "more rows than columns")

    # Row degrees and highest-row-degree coefficient matrix
    row_norms = np.linalg.norm(stack, axis=2)
    if np.any(row_norms.max(axis=0) == 0):
        return MinimalityCertificate(False, "deterministic", "zero row")
    row_degrees = [int(np.nonzero(row_norms[:, i])[0][-1]) for i in range(rows)]
    Q_h = np.array([stack[d, i] for i, d in enumerate(row_degrees)])
    if not _full_row_rank(Q_h, tol.rank_rtol * max(rows, cols)):
        return MinimalityCertificate(False, "deterministic", "not row reduced")

    coeff_norms = np.array([np.linalg.norm(c, 2) for c in stack])

    def scale_at(lam: complex) -> float:
        return float(np.sum(coeff_norms * max(1.0, abs(lam)) ** np.arange(len(coeff_norms))))

    kind = "probabilistic"
    # Finite rank-drop points of Q are roots of det(Q(lam) R) for random constant R
    R = rng.standard_normal((cols, rows)) + 1j * rng.standard_normal((cols, rows))
    S = arithmetic.trim(arithmetic.matmul(stack, R[np.newaxis]))
    if S.shape[0] == 1:
        if not _full_row_rank(S[0], tol.rank_rtol * rows):
            return MinimalityCertificate(False, "probabilistic", "rank deficient at every point")
        kind = "deterministic"
    else:
        L0, L1 = arithmetic.companion_pencil(S)
        try:
            alpha, beta = linalg.eig(-L0, L1, right=False, homogeneous_eigvals=True)
        except (linalg.LinAlgError, ValueError) as e:
            logger.warning(f"Candidate computation failed, falling back to random probes: {str(e)}")
            alpha, beta = np.array([]), np.array([])
        else:
            size = np.hypot(np.abs(alpha), np.abs(beta))
            indeterminate = size <= tol.infinity_tol * max(np.linalg.norm(L0), np.linalg.norm(L1), 1.0)
            if not np.any(indeterminate):
                kind = "deterministic"
        finite = np.abs(beta) > tol.infinity_tol * np.hypot(np.abs(alpha), np.abs(beta))
        for lam in alpha[finite] / beta[finite]:
            Qz = arithmetic.evaluate(stack, lam)
            if not _full_row_rank(Qz, tol.candidate_rank_rtol, scale_at(lam)):
                return MinimalityCertificate(False, kind, f"rank drop at {complex(lam):.6g}")

    for lam in rng.standard_normal(tol.minimality_probes) + 1j * rng.standard_normal(tol.minimality_probes):
        if not _full_row_rank(arithmetic.evaluate(stack, lam), tol.rank_rtol * max(rows, cols), scale_at(lam)):
            return MinimalityCertificate(False, kind, f"rank drop at random point {complex(lam):.6g}")

    return MinimalityCertificate(True, kind)


def body_product(M, D1, D2) -> MatrixPolynomial:
    """
    D2(lam) M(lam) D1(lam)^T by exact coefficient convolution

    Args:
        M: Body (MatrixPolynomial in monomial form or coefficient stack)
        D1: Right dual basis
        D2: Left dual basis

    Returns:
        Monomial MatrixPolynomial
    """
    M, D1, D2 = _stack(M), _stack(D1), _stack(D2)
    product = arithmetic.matmul(arithmetic.matmul(D2, M), arithmetic.transpose(D1))
    return MatrixPolynomial.monomial(product)
