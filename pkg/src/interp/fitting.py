"""
Interpolating matrix polynomials in the Newton, Lagrange and Chebyshev bases
"""
import logging

import numpy as np
from numpy.polynomial import chebyshev as C
from scipy import linalg

from src.errors import ParameterRangeError
from src.interp.functions import as_sampled
from src.interp.nodes import chebyshev_nodes
from src.polycore.basis import NodeSet, chebyshev_values
from src.polycore.matrix_polynomial import MatrixPolynomial

logger = logging.getLogger(__name__)


def _as_nodes(nodes) -> NodeSet:
    return nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)


def divided_differences(T, nodes) -> MatrixPolynomial:
    """
    Newton interpolant of T through k + 1 nodes by the divided-difference table

    The Newton basis uses the first k nodes; all k + 1 enter the table.

    Args:
        T: Matrix function (SampledFunction or callable)
        nodes: k + 1 distinct nodes

    Returns:
        Newton MatrixPolynomial of grade k
    """
    nodes = _as_nodes(nodes)
    x = nodes.points
    if len(x) < 1:
        raise ParameterRangeError("Divided differences need at least one node")
    table = as_sampled(T).sample(x)
    coeffs = [table[0].copy()]
    # in-place column sweep: after pass j, table[i] holds [y_i, ..., y_{i+j}]
    for j in range(1, len(x)):
        for i in range(len(x) - j):
            table[i] = (table[i + 1] - table[i]) / (x[i + j] - x[i])
        coeffs.append(table[0].copy())
    logger.info(f"Newton interpolant of grade {len(x) - 1}")
    return MatrixPolynomial.newton(x[:-1], np.stack(coeffs))


def lagrange_sample(T, nodes) -> MatrixPolynomial:
    """
    Lagrange interpolant of T: the samples T(x_i) are the coefficients

    Args:
        T: Matrix function
        nodes: k + 1 distinct nodes

    Returns:
        Lagrange MatrixPolynomial of grade k (weights cached on the node set)
    """
    nodes = _as_nodes(nodes)
    samples = as_sampled(T).sample(nodes.points)
    return MatrixPolynomial.lagrange(nodes, samples)


def chebyshev_coefficients(T, k: int, kind: int = 1, node_kind: int = 1) -> MatrixPolynomial:
    """
    Chebyshev interpolant of T by a collocation solve at Chebyshev nodes

    Args:
        T: Matrix function
        k: Grade (>= 0)
        kind: Basis kind, 1 (T_j) or 2 (U_j)
        node_kind: Kind of the Chebyshev nodes sampled

    Returns:
        Chebyshev MatrixPolynomial of grade k
    """
    if k < 0:
        raise ParameterRangeError(f"Grade must be >= 0, got {k}")
    if kind not in (1, 2):
        raise ParameterRangeError(f"Chebyshev kind must be 1 or 2, got {kind}")
    x = np.zeros(1) if k == 0 else chebyshev_nodes(k, node_kind).points.real
    samples = as_sampled(T).sample(x)
    if kind == 1:
        V = C.chebvander(x, k)
    else:
        V = np.array([chebyshev_values(k, z, 2).real for z in x])
    _, m, n = samples.shape
    coeffs = linalg.solve(V, samples.reshape(k + 1, m * n))
    return MatrixPolynomial.chebyshev(coeffs.reshape(k + 1, m, n), kind)
