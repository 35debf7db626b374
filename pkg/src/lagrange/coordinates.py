"""
Coordinates of the constant 1 and partial barycentric sums for the Lagrange basis
"""
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from src.errors import ParameterRangeError
from src.pencils.minimal_bases import sample_points
from src.polycore import arithmetic
from src.polycore.basis import BasisKind, NodeSet, node_product
from src.polycore.matrix_polynomial import MatrixPolynomial, require_basis


def check_lagrange_mu(k: int, mu: int):
    if k < 1:
        raise ParameterRangeError(f"Linearizations need grade k >= 1, got {k}")
    if not 0 <= mu <= k - 1:
        raise ParameterRangeError(f"mu must lie in [0, {k - 1}], got {mu}")


def other_indices(lo: int, hi: int, skip: Iterable[int]):
    skip = set(skip)
    return [j for j in range(lo, hi + 1) if j not in skip]


def e_factor(nodes: NodeSet, mu: int, i: int) -> np.ndarray:
    """E_i = prod over {1..mu+2} minus {i, i+1} of gamma_j"""
    return node_product(nodes, other_indices(1, mu + 2, (i, i + 1)))


def f_factor(nodes: NodeSet, k: int, mu: int, i: int) -> np.ndarray:
    """F_i = prod over {mu+1..k+1} minus {i, i+1} of gamma_j"""
    return node_product(nodes, other_indices(mu + 1, k + 1, (i, i + 1)))


def _at(nodes: NodeSet, indices, point: complex) -> complex:
    return complex(np.prod([point - nodes.node(j) for j in indices]))


@dataclass(frozen=True, eq=False)
class MuCoordinates:
    """Coordinates of 1 in the D2 entries (a) and in the D1 entries (b)"""

    a: np.ndarray
    b: np.ndarray
    mu: int
    k: int
    nodes: NodeSet

    def a_coord(self, i: int) -> complex:
        """a_i for i in 1..mu+1"""
        if not 1 <= i <= self.mu + 1:
            raise ParameterRangeError(f"a index must lie in [1, {self.mu + 1}], got {i}")
        return complex(self.a[self.mu + 1 - i])

    def b_coord(self, i: int) -> complex:
        """b_i for i in mu+1..k"""
        if not self.mu + 1 <= i <= self.k:
            raise ParameterRangeError(f"b index must lie in [{self.mu + 1}, {self.k}], got {i}")
        return complex(self.b[self.k - i])

    def defects(self) -> Tuple[float, float]:
        """
        Largest deviation of both coordinate identities from 1

        Returns:
            (defect of the a identity, defect of the b identity)
        """
        radius = 1.0 + float(np.max(np.abs(self.nodes.points)))
        a_poly = sum(arithmetic.pad_vector(self.a_coord(i) * e_factor(self.nodes, self.mu, i), self.mu + 1)
                     for i in range(1, self.mu + 2))
        b_poly = sum(arithmetic.pad_vector(self.b_coord(i) * f_factor(self.nodes, self.k, self.mu, i),
                                           self.k - self.mu) for i in range(self.mu + 1, self.k + 1))
        a_pts = sample_points(self.mu + 3, radius)
        b_pts = sample_points(self.k - self.mu + 2, radius)
        a_def = max(abs(np.polynomial.polynomial.polyval(z, a_poly) - 1) for z in a_pts)
        b_def = max(abs(np.polynomial.polynomial.polyval(z, b_poly) - 1) for z in b_pts)
        return float(a_def), float(b_def)


def mu_coordinates(nodes, k: int, mu: int) -> MuCoordinates:
    """
    Coordinates a_1..a_{mu+1} and b_{mu+1}..b_k of the constant 1

    Endpoints use closed products; interior values follow from evaluating
    the identity at the interior nodes in order.

    Args:
        nodes: k + 1 distinct nodes
        k: Grade
        mu: Block parameter in [0, k-1]

    Returns:
        MuCoordinates with a = [a_{mu+1}, ..., a_1] and b = [b_k, ..., b_{mu+1}]
    """
    nodes = nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)
    check_lagrange_mu(k, mu)
    if len(nodes) != k + 1:
        raise ParameterRangeError(f"Grade {k} needs exactly {k + 1} nodes, got {len(nodes)}")
    x = nodes.node

    a = {1: 1.0 / _at(nodes, range(3, mu + 3), x(1)),
         mu + 1: 1.0 / _at(nodes, range(1, mu + 1), x(mu + 2))}
    for s in range(2, mu + 1):
        prev = _at(nodes, other_indices(1, mu + 2, (s - 1, s)), x(s))
        cur = _at(nodes, other_indices(1, mu + 2, (s, s + 1)), x(s))
        a[s] = (1.0 - a[s - 1] * prev) / cur

    b = {mu + 1: 1.0 / _at(nodes, range(mu + 3, k + 2), x(mu + 1)),
         k: 1.0 / _at(nodes, range(mu + 1, k), x(k + 1))}
    for s in range(mu + 2, k):
        prev = _at(nodes, other_indices(mu + 1, k + 1, (s - 1, s)), x(s))
        cur = _at(nodes, other_indices(mu + 1, k + 1, (s, s + 1)), x(s))
        b[s] = (1.0 - b[s - 1] * prev) / cur

    return MuCoordinates(
        a=np.array([a[i] for i in range(mu + 1, 0, -1)], dtype=complex),
        b=np.array([b[i] for i in range(k, mu, -1)], dtype=complex),
        mu=mu, k=k, nodes=nodes,
    )


def split_stack(P: MatrixPolynomial, lo: int, hi: int) -> np.ndarray:
    """
    Monomial stack of sum_{i=lo}^{hi} P_i w_i prod_{s != i} gamma_s

    Args:
        P: Lagrange matrix polynomial
        lo: First 1-based sample index
        hi: Last 1-based sample index (hi < lo gives zero)

    Returns:
        Coefficient stack of length k + 1
    """
    k = P.grade
    acc = np.zeros((k + 1,) + P.coeffs.shape[1:], dtype=complex)
    for i in range(lo, hi + 1):
        element = P.nodes.weights[i - 1] * node_product(P.nodes, other_indices(1, k + 1, (i,)))
        acc = acc + arithmetic.scalar_times(element, P.coefficient(i)[np.newaxis])
    return acc


def lagrange_splits(P: MatrixPolynomial, j: int, lam: complex) -> Tuple[np.ndarray, np.ndarray]:
    """
    Partial barycentric sums T_j and S_j at lam

    T_j sums the samples 1..j, S_j the samples j..k+1, so S_{j+1} + T_j = P.

    Args:
        P: Lagrange matrix polynomial of grade k
        j: Index in [1, k+1]
        lam: Evaluation point (nodes allowed)

    Returns:
        (T_j(lam), S_j(lam))
    """
    require_basis(P, BasisKind.LAGRANGE)
    k = P.grade
    if not 1 <= j <= k + 1:
        raise ParameterRangeError(f"Split index must lie in [1, {k + 1}], got {j}")
    diffs = lam - P.nodes.points
    terms = [P.nodes.weights[i] * np.prod(np.delete(diffs, i)) * P.coeffs[i] for i in range(k + 1)]
    zero = np.zeros(P.coeffs.shape[1:], dtype=complex)
    return sum(terms[:j], zero), sum(terms[j - 1:], zero)
