"""
Polynomial bases and interpolation nodes
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, reduce
from typing import Iterable, List, Optional

import numpy as np
from numpy.polynomial import chebyshev as C
from numpy.polynomial import polynomial as Poly

from src.config import get_tolerances
from src.errors import DuplicateNodesError, ParameterRangeError

logger = logging.getLogger(__name__)


class BasisKind(str, Enum):
    """Supported polynomial bases"""

    MONOMIAL = "monomial"
    NEWTON = "newton"
    LAGRANGE = "lagrange"
    CHEBYSHEV1 = "chebyshev1"
    CHEBYSHEV2 = "chebyshev2"

    @property
    def is_chebyshev(self) -> bool:
        return self in (BasisKind.CHEBYSHEV1, BasisKind.CHEBYSHEV2)

    @property
    def needs_nodes(self) -> bool:
        return self in (BasisKind.NEWTON, BasisKind.LAGRANGE)

    @property
    def chebyshev_kind(self) -> int:
        if not self.is_chebyshev:
            raise ParameterRangeError(f"{self.value} is not a Chebyshev basis")
        return 1 if self is BasisKind.CHEBYSHEV1 else 2


@dataclass(frozen=True, eq=False)
class NodeSet:
    """Ordered, pairwise distinct complex nodes with barycentric weights"""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=complex).ravel()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

        if len(pts) > 1:
            gaps = np.abs(np.subtract.outer(pts, pts))
            np.fill_diagonal(gaps, np.inf)
            if np.any(gaps == 0):
                i, j = np.argwhere(gaps == 0)[0]
                raise DuplicateNodesError(f"Nodes x_{i + 1} and x_{j + 1} coincide ({pts[i]})")
            scale = max(1.0, float(np.max(np.abs(pts))))
            if gaps.min() < get_tolerances().node_separation_tol * scale:
                logger.warning(f"Nodes are nearly coincident (min separation {gaps.min():.3e})")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def node(self, i: int) -> complex:
        """
        Node x_i with 1-based index

        Args:
            i: Index in 1..len(nodes)

        Returns:
            The node value
        """
        if not 1 <= i <= len(self.points):
            raise ParameterRangeError(f"Node index {i} outside 1..{len(self.points)}")
        return complex(self.points[i - 1])

    @cached_property
    def weights(self) -> np.ndarray:
        """Barycentric weights w_i = 1 / prod_{j != i} (x_i - x_j)"""
        pts = self.points
        w = np.empty(len(pts), dtype=complex)
        for i in range(len(pts)):
            w[i] = 1.0 / np.prod(pts[i] - np.delete(pts, i))
        w.setflags(write=False)
        return w

    def ell(self, lam: complex) -> complex:
        """Node polynomial l(lam) = prod (lam - x_i)"""
        return complex(np.prod(lam - self.points))

    def prefix(self, count: int) -> "NodeSet":
        """First `count` nodes as a new NodeSet"""
        return NodeSet(self.points[:count])

    def match(self, lam: complex, tol: float) -> Optional[int]:
        """
        Find the node that lam sits on

        Args:
            lam: Point to test
            tol: Relative tolerance, |lam - x_i| <= tol * (1 + |x_i|)

        Returns:
            1-based index of the closest matching node, or None
        """
        if len(self.points) == 0 or not np.isfinite(lam):
            return None
        dist = np.abs(lam - self.points)
        i = int(np.argmin(dist))
        if dist[i] <= tol * (1.0 + abs(self.points[i])):
            return i + 1
        return None

    def to_list(self) -> List[List[float]]:
        return [[float(z.real), float(z.imag)] for z in self.points]


@dataclass(frozen=True, eq=False)
class BasisDescriptor:
    """Basis kind plus the node set for node-based bases"""

    kind: BasisKind
    nodes: Optional[NodeSet] = None

    def __post_init__(self):
        kind = BasisKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind.needs_nodes and self.nodes is None:
            raise ParameterRangeError(f"The {kind.value} basis requires nodes")
        if not kind.needs_nodes and self.nodes is not None:
            raise ParameterRangeError(f"The {kind.value} basis takes no nodes")


def node_product(nodes: NodeSet, indices: Iterable[int]) -> np.ndarray:
    """
    Ascending monomial coefficients of prod (lam - x_j) over 1-based indices

    Args:
        nodes: Node set
        indices: 1-based node indices (may be empty)

    Returns:
        Coefficient vector, constant term first
    """
    roots = [nodes.node(j) for j in indices]
    return Poly.polyfromroots(roots).astype(complex) if roots else np.ones(1, dtype=complex)


def linear_factor_product(roots: Iterable[complex]) -> np.ndarray:
    """Ascending coefficients of prod (1 - r lam), built by convolution"""
    return reduce(Poly.polymul, ([1.0, -complex(r)] for r in roots), np.ones(1, dtype=complex))


def chebyshev_values(n: int, lam: complex, kind: int) -> np.ndarray:
    """
    Values phi_0(lam), ..., phi_n(lam) by the forward three-term recurrence

    Args:
        n: Highest index (>= 0)
        lam: Evaluation point, any complex number
        kind: 1 for T_j, 2 for U_j

    Returns:
        Complex array of length n + 1
    """
    if kind not in (1, 2):
        raise ParameterRangeError(f"Chebyshev kind must be 1 or 2, got {kind}")
    values = np.empty(n + 1, dtype=complex)
    values[0] = 1.0
    if n >= 1:
        values[1] = lam if kind == 1 else 2 * lam
    for j in range(2, n + 1):
        values[j] = 2 * lam * values[j - 1] - values[j - 2]
    return values


def chebyshev_value(j: int, lam: complex, kind: int) -> complex:
    """phi_j(lam) for any integer j, negative indices following the recurrence backwards"""
    if j >= 0:
        return complex(chebyshev_values(j, lam, kind)[j])
    if kind == 1:
        return chebyshev_value(-j, lam, kind)
    if j == -1:
        return 0j
    return -chebyshev_value(-j - 2, lam, kind)


def chebyshev_monomial(i: int, kind: int) -> np.ndarray:
    """Ascending monomial coefficients of T_i or U_i"""
    if kind == 1:
        unit = np.zeros(i + 1)
        unit[i] = 1.0
        return C.cheb2poly(unit).astype(complex)
    prev, cur = np.zeros(1, dtype=complex), np.ones(1, dtype=complex)
    for _ in range(i):
        prev, cur = cur, Poly.polysub(2 * Poly.polymulx(cur), prev)
    return np.asarray(cur, dtype=complex)


def chebyshev_identity_defects(r: int, l: int, lam: complex) -> np.ndarray:
    """
    Residuals of the four product identities linking T and U

    Args:
        r: First index (>= 1)
        l: Second index (>= 1)
        lam: Evaluation point

    Returns:
        Array of the four absolute residuals
    """
    if r < 1 or l < 1:
        raise ParameterRangeError("Identities need r >= 1 and l >= 1")
    top = r + l + 1
    T = chebyshev_values(top, lam, 1)
    U = chebyshev_values(top, lam, 2)
    return np.abs(np.array([
        T[r + l] - (U[r] * T[l] - U[r - 1] * T[l - 1]),
        T[r + l + 1] - (2 * lam * U[r] * T[l] - U[r] * T[l - 1] - U[r - 1] * T[l]),
        U[r + l] - (U[r] * U[l] - U[r - 1] * U[l - 1]),
        U[r + l + 1] - (2 * lam * U[r] * U[l] - U[r] * U[l - 1] - U[r - 1] * U[l]),
    ]))


def basis_element_monomial(basis: BasisDescriptor, i: int, k: int) -> np.ndarray:
    """
    Ascending monomial coefficients of the basis element phi_i at grade k

    Args:
        basis: Basis descriptor
        i: 0-based element index (Lagrange: node index, 0..k)
        k: Grade

    Returns:
        Coefficient vector of length deg(phi_i) + 1
    """
    kind = basis.kind
    if kind is BasisKind.MONOMIAL:
        unit = np.zeros(i + 1, dtype=complex)
        unit[i] = 1.0
        return unit
    if kind is BasisKind.NEWTON:
        return node_product(basis.nodes, range(1, i + 1))
    if kind is BasisKind.LAGRANGE:
        others = [j for j in range(1, k + 2) if j != i + 1]
        return basis.nodes.weights[i] * node_product(basis.nodes, others)
    return chebyshev_monomial(i, kind.chebyshev_kind)
