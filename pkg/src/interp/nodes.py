"""
Chebyshev interpolation nodes
"""
import numpy as np

from src.errors import ParameterRangeError
from src.polycore.basis import NodeSet


def chebyshev_nodes(k: int, kind: int = 1) -> NodeSet:
    """
    The k + 1 Chebyshev nodes of the first or second kind, in index order

    First kind: cos((2i - 1) pi / (2(k + 1))); second kind: cos((i - 1) pi / k),
    for i = 1..k+1.

    Args:
        k: Grade (>= 1)
        kind: 1 or 2

    Returns:
        NodeSet of k + 1 real nodes
    """
    if k < 1:
        raise ParameterRangeError(f"Chebyshev nodes need k >= 1, got {k}")
    i = np.arange(1, k + 2)
    if kind == 1:
        return NodeSet(np.cos((2 * i - 1) * np.pi / (2 * (k + 1))))
    if kind == 2:
        return NodeSet(np.cos((i - 1) * np.pi / k))
    raise ParameterRangeError(f"Chebyshev kind must be 1 or 2, got {kind}")
