"""
Matrix polynomials in monomial, Newton, Lagrange and Chebyshev bases
"""
import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.config import get_tolerances
from src.errors import DimensionMismatchError, ParameterRangeError
from src.polycore import arithmetic
from src.polycore.basis import (
    BasisDescriptor,
    BasisKind,
    NodeSet,
    basis_element_monomial,
    chebyshev_monomial,
    chebyshev_values,
    linear_factor_product,
)

logger = logging.getLogger(__name__)

INFINITY = complex(np.inf, 0.0)


def is_infinite(value: complex) -> bool:
    return bool(np.isinf(value))


@dataclass(frozen=True, eq=False)
class MatrixPolynomial:
    """Grade-k matrix polynomial sum P_i phi_i(lam) with m x n coefficients"""

    basis: BasisDescriptor
    coeffs: np.ndarray

    def __post_init__(self):
        stack = arithmetic.as_stack(self.coeffs).copy()
        stack.setflags(write=False)
        object.__setattr__(self, "coeffs", stack)

        k = stack.shape[0] - 1
        kind = self.basis.kind
        if kind is BasisKind.NEWTON and len(self.basis.nodes) != k:
            raise ParameterRangeError(f"Newton grade {k} needs exactly {k} nodes, got {len(self.basis.nodes)}")
        if kind is BasisKind.LAGRANGE and len(self.basis.nodes) != k + 1:
            raise ParameterRangeError(f"Lagrange grade {k} needs exactly {k + 1} nodes, got {len(self.basis.nodes)}")

    @classmethod
    def monomial(cls, coeffs) -> "MatrixPolynomial":
        return cls(BasisDescriptor(BasisKind.MONOMIAL), coeffs)

    @classmethod
    def newton(cls, nodes: Sequence[complex], coeffs) -> "MatrixPolynomial":
        return cls(BasisDescriptor(BasisKind.NEWTON, _as_nodes(nodes)), coeffs)

    @classmethod
    def lagrange(cls, nodes: Sequence[complex], samples) -> "MatrixPolynomial":
        return cls(BasisDescriptor(BasisKind.LAGRANGE, _as_nodes(nodes)), samples)

    @classmethod
    def chebyshev(cls, coeffs, kind: int = 1) -> "MatrixPolynomial":
        basis = BasisKind.CHEBYSHEV1 if kind == 1 else BasisKind.CHEBYSHEV2
        if kind not in (1, 2):
            raise ParameterRangeError(f"Chebyshev kind must be 1 or 2, got {kind}")
        return cls(BasisDescriptor(basis), coeffs)

    @property
    def kind(self) -> BasisKind:
        return self.basis.kind

    @property
    def nodes(self) -> NodeSet:
        return self.basis.nodes

    @property
    def grade(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def rows(self) -> int:
        return self.coeffs.shape[1]

    @property
    def cols(self) -> int:
        return self.coeffs.shape[2]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def coefficient(self, i: int) -> np.ndarray:
        """
        Coefficient by its natural index

        Args:
            i: 0..k for Newton, Chebyshev and monomial; 1..k+1 for Lagrange samples

        Returns:
            The m x n coefficient (read-only view)
        """
        offset = 1 if self.kind is BasisKind.LAGRANGE else 0
        if not offset <= i <= self.grade + offset:
            raise ParameterRangeError(f"Coefficient index {i} outside {offset}..{self.grade + offset}")
        return self.coeffs[i - offset]

    def __call__(self, lam: complex) -> np.ndarray:
        return evaluate(self, lam)

    def with_coeffs(self, coeffs) -> "MatrixPolynomial":
        """Same basis, new coefficients"""
        return MatrixPolynomial(self.basis, coeffs)


def _as_nodes(nodes) -> NodeSet:
    return nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)


def evaluate(p: MatrixPolynomial, lam: complex) -> np.ndarray:
    """
    Evaluate P(lam) = sum P_i phi_i(lam)

    Args:
        p: Matrix polynomial
        lam: Finite evaluation point

    Returns:
        Complex m x n matrix
    """
    lam = complex(lam)
    if not np.isfinite(lam):
        raise ParameterRangeError("evaluate needs a finite point; use reverse() for infinity")
    kind = p.kind
    P = p.coeffs

    if kind is BasisKind.MONOMIAL:
        return arithmetic.evaluate(P, lam)

    if kind is BasisKind.NEWTON:
        acc = P[0].copy()
        running = 1.0 + 0j
        for i in range(1, p.grade + 1):
            running *= lam - p.nodes.points[i - 1]
            acc = acc + running * P[i]
        return acc

    if kind.is_chebyshev:
        # Clenshaw summation
        b1 = np.zeros(P.shape[1:], dtype=complex)
        b2 = np.zeros_like(b1)
        for j in range(p.grade, 0, -1):
            b1, b2 = P[j] + 2 * lam * b1 - b2, b1
        if kind is BasisKind.CHEBYSHEV1:
            return P[0] + lam * b1 - b2
        return P[0] + 2 * lam * b1 - b2

    # first barycentric form
    points = p.nodes.points
    hit = np.nonzero(points == lam)[0]
    if hit.size:
        return P[hit[0]].copy()
    diffs = lam - points
    tol = get_tolerances().node_proximity_tol
    close = np.abs(diffs) < tol * (1 + np.abs(points))
    if np.any(close):
        logger.warning(f"Barycentric evaluation at {lam} is within {tol:g} of node {points[close][0]}")
    scale = p.nodes.weights / diffs
    return np.prod(diffs) * np.tensordot(scale, P, axes=(0, 0))


def basis_values(p: MatrixPolynomial, lam: complex) -> np.ndarray:
    """
    Values phi_0(lam), ..., phi_k(lam) of the basis of p

    Args:
        p: Matrix polynomial (only its basis and grade are used)
        lam: Finite evaluation point

    Returns:
        Complex array of length k + 1
    """
    lam = complex(lam)
    k = p.grade
    kind = p.kind
    if kind is BasisKind.MONOMIAL:
        return lam ** np.arange(k + 1)
    if kind is BasisKind.NEWTON:
        return np.concatenate([[1.0 + 0j], np.cumprod(lam - p.nodes.points)])
    if kind.is_chebyshev:
        return chebyshev_values(k, lam, kind.chebyshev_kind)
    diffs = lam - p.nodes.points
    return np.array([p.nodes.weights[i] * np.prod(np.delete(diffs, i)) for i in range(k + 1)])


def to_monomial(p: MatrixPolynomial) -> MatrixPolynomial:
    """
    Expand p into the monomial basis at the same grade

    Args:
        p: Matrix polynomial in any basis

    Returns:
        Coefficientwise-equal monomial polynomial
    """
    if p.kind is BasisKind.MONOMIAL:
        return p
    k = p.grade
    table = np.array([arithmetic.pad_vector(basis_element_monomial(p.basis, i, k), k + 1) for i in range(k + 1)])
    return MatrixPolynomial.monomial(np.einsum("is,imn->smn", table, p.coeffs))


def reverse(p: MatrixPolynomial) -> MatrixPolynomial:
    """
    The reversal lam**k P(1/lam) as a grade-k monomial polynomial

    Each basis element is reversed on its own: product-form elements
    prod_{j<=s}(lam - a_j) become lam**(k-s) prod (1 - a_j lam), Chebyshev
    elements have their monomial coefficients flipped.

    Args:
        p: Matrix polynomial of grade k

    Returns:
        rev_k P in the monomial basis
    """
    k = p.grade
    kind = p.kind
    rows = []
    for i in range(k + 1):
        if kind is BasisKind.MONOMIAL:
            rev = np.concatenate([np.zeros(k - i), [1.0]])
        elif kind is BasisKind.NEWTON:
            rev = np.concatenate([np.zeros(k - i), linear_factor_product(p.nodes.points[:i])])
        elif kind is BasisKind.LAGRANGE:
            rev = p.nodes.weights[i] * linear_factor_product(np.delete(p.nodes.points, i))
        else:
            rev = arithmetic.pad_vector(chebyshev_monomial(i, kind.chebyshev_kind), k + 1)[::-1]
        rows.append(arithmetic.pad_vector(rev, k + 1))
    table = np.array(rows)
    return MatrixPolynomial.monomial(np.einsum("is,imn->smn", table, p.coeffs))


def _check_newton_index(nodes: NodeSet, i: int, j: int):
    count = len(nodes)
    if not (1 <= i <= count and 1 <= j <= count):
        raise ParameterRangeError(f"Newton indices (i={i}, j={j}) outside the node range 1..{count}")


def gamma(nodes: NodeSet, j: int, lam: complex) -> complex:
    """gamma_j(lam) = lam - x_j"""
    return complex(lam) - nodes.node(j)


def newton_aux(nodes: NodeSet, i: int, j: int, lam: complex) -> complex:
    """
    Partial Newton product n_i^j(lam) = prod_{l=i}^{j} (lam - x_l)

    Args:
        nodes: Node set
        i: First factor (1-based)
        j: Last factor (1-based); j < i gives the empty product 1

    Returns:
        The product value
    """
    nodes = _as_nodes(nodes)
    _check_newton_index(nodes, i, j)
    if j < i:
        return 1.0 + 0j
    return complex(np.prod(complex(lam) - nodes.points[i - 1: j]))


def monomial_stack(p: MatrixPolynomial) -> np.ndarray:
    """Monomial coefficient stack of p"""
    return to_monomial(p).coeffs


def require_basis(p: MatrixPolynomial, *kinds: BasisKind):
    if p.kind not in kinds:
        names = ", ".join(k.value for k in kinds)
        raise ParameterRangeError(f"Expected a polynomial in the {names} basis, got {p.kind.value}")


def require_conformable(a: np.ndarray, shape, name: str):
    if tuple(a.shape) != tuple(shape):
        raise DimensionMismatchError(f"{name} has shape {a.shape}, expected {tuple(shape)}")
