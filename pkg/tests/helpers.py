"""
Builders shared by the test modules
"""
import numpy as np

from src.interp import chebyshev_coefficients, divided_differences, polynomial_function
from src.polycore import MatrixPolynomial, arithmetic, evaluate


def random_stack(rng, k, m, n):
    return rng.standard_normal((k + 1, m, n)) + 1j * rng.standard_normal((k + 1, m, n))


def random_nodes(rng, count):
    """Distinct nodes in the unit disk"""
    r = np.sqrt(rng.uniform(0.1, 1.0, count))
    theta = rng.uniform(0, 2 * np.pi, count)
    return r * np.exp(1j * theta)


def in_basis(P_monomial: MatrixPolynomial, basis: str, rng, kind: int = 1) -> MatrixPolynomial:
    """Re-express a monomial polynomial in the requested basis at the same grade"""
    k = P_monomial.grade
    if basis == "newton":
        return divided_differences(polynomial_function(P_monomial), random_nodes(rng, k + 1))
    if basis == "lagrange":
        nodes = random_nodes(rng, k + 1)
        return MatrixPolynomial.lagrange(nodes, np.stack([evaluate(P_monomial, z) for z in nodes]))
    return chebyshev_coefficients(polynomial_function(P_monomial), k, kind)


def planted_singular(rng, kernel: np.ndarray, k: int) -> MatrixPolynomial:
    """
    P = F K with F a random square polynomial of degree k - deg K

    Args:
        rng: Generator
        kernel: Monomial stack of K (rows < cols)
        k: Grade of the result

    Returns:
        Monomial MatrixPolynomial whose right minimal indices are those of K
    """
    rows = kernel.shape[1]
    F = random_stack(rng, k - (kernel.shape[0] - 1), rows, rows)
    return MatrixPolynomial.monomial(arithmetic.matmul(F, kernel))


def transposed(P: MatrixPolynomial) -> MatrixPolynomial:
    return MatrixPolynomial.monomial(arithmetic.transpose(P.coeffs))


# K(lam) stacks with known right minimal indices
KERNEL_INDEX_0 = np.array([[[1, 0, 0], [0, 1, 0]], [[0, 0, 0], [0, 0, 0]]], dtype=complex)
KERNEL_INDEX_1 = np.array([[[0, -1, 0], [0, 0, 1]], [[1, 0, 0], [0, 0, 0]]], dtype=complex)
KERNEL_INDEX_2 = np.array([[[0, -1, 0], [0, 0, -1]], [[1, 0, 0], [0, 1, 0]]], dtype=complex)
PLANTED = [(KERNEL_INDEX_0, 0), (KERNEL_INDEX_1, 1), (KERNEL_INDEX_2, 2)]


def relative_stack_error(a: np.ndarray, b: np.ndarray) -> float:
    length = max(a.shape[0], b.shape[0])
    diff = arithmetic.pad_stack(a, length) - arithmetic.pad_stack(b, length)
    scale = max(1.0, max(np.linalg.norm(c) for c in b))
    return float(max(np.linalg.norm(c) for c in diff) / scale)
