"""
Arithmetic on monomial coefficient stacks of polynomial matrices

A stack is a complex array of shape (d + 1, rows, cols) whose i-th slice
multiplies lam**i.
"""
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.errors import DimensionMismatchError, ParameterRangeError


def as_stack(coeffs) -> np.ndarray:
    stack = np.array(coeffs, dtype=complex)
    if stack.ndim == 2:
        stack = stack[np.newaxis]
    if stack.ndim != 3 or stack.shape[0] == 0:
        raise DimensionMismatchError(f"Expected a (d+1, rows, cols) coefficient stack, got shape {stack.shape}")
    return stack


def pad_stack(stack: np.ndarray, length: int) -> np.ndarray:
    if stack.shape[0] >= length:
        return stack
    extra = np.zeros((length - stack.shape[0],) + stack.shape[1:], dtype=complex)
    return np.concatenate([stack, extra])


def pad_vector(vec: np.ndarray, length: int) -> np.ndarray:
    out = np.zeros(length, dtype=complex)
    out[: len(vec)] = vec
    return out


def degree(stack: np.ndarray, tol: float = 0.0) -> int:
    """
    Index of the highest non-negligible coefficient

    Args:
        stack: Coefficient stack
        tol: Relative tolerance on the coefficient norms

    Returns:
        Degree, or -1 for the zero polynomial
    """
    norms = np.array([np.linalg.norm(c) for c in stack])
    if norms.size == 0 or norms.max() == 0:
        return -1
    keep = np.nonzero(norms > tol * norms.max())[0]
    return int(keep[-1])


def trim(stack: np.ndarray, tol: float = 0.0) -> np.ndarray:
    return stack[: max(degree(stack, tol), 0) + 1]


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1:] != b.shape[1:]:
        raise DimensionMismatchError(f"Cannot add {a.shape[1:]} and {b.shape[1:]} polynomial matrices")
    length = max(a.shape[0], b.shape[0])
    return pad_stack(a, length) + pad_stack(b, length)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two polynomial matrices (coefficient convolution)"""
    if a.shape[2] != b.shape[1]:
        raise DimensionMismatchError(f"Cannot multiply {a.shape[1:]} by {b.shape[1:]}")
    out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1], b.shape[2]), dtype=complex)
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            out[i + j] += a[i] @ b[j]
    return out


def scalar_times(scalar: Sequence[complex], stack: np.ndarray) -> np.ndarray:
    """Multiply a polynomial matrix by a scalar polynomial given by ascending coefficients"""
    scalar = np.asarray(scalar, dtype=complex)
    out = np.zeros((len(scalar) + stack.shape[0] - 1,) + stack.shape[1:], dtype=complex)
    for i, s in enumerate(scalar):
        out[i: i + stack.shape[0]] += s * stack
    return out


def scalar_identity(scalar: Sequence[complex], size: int) -> np.ndarray:
    """The polynomial matrix s(lam) * I_size"""
    return np.multiply.outer(np.asarray(scalar, dtype=complex), np.eye(size))


def transpose(stack: np.ndarray) -> np.ndarray:
    return np.swapaxes(stack, 1, 2)


def evaluate(stack: np.ndarray, lam: complex) -> np.ndarray:
    """Horner evaluation of a monomial coefficient stack"""
    acc = np.array(stack[-1], dtype=complex)
    for c in stack[-2::-1]:
        acc = acc * lam + c
    return acc


def block_matrix(grid: List[List[Optional[np.ndarray]]], row_sizes: Sequence[int],
                 col_sizes: Sequence[int]) -> np.ndarray:
    """
    Assemble a polynomial block matrix from a grid of stacks

    Args:
        grid: Rows of blocks; None means a zero block
        row_sizes: Row count of each block row
        col_sizes: Column count of each block column

    Returns:
        Coefficient stack of the assembled matrix
    """
    length = max([b.shape[0] for row in grid for b in row if b is not None] or [1])
    out = np.zeros((length, sum(row_sizes), sum(col_sizes)), dtype=complex)
    r0 = 0
    for i, row in enumerate(grid):
        c0 = 0
        for j, blk in enumerate(row):
            if blk is not None:
                if blk.shape[1:] != (row_sizes[i], col_sizes[j]):
                    raise DimensionMismatchError(
                        f"Block ({i},{j}) has shape {blk.shape[1:]}, expected {(row_sizes[i], col_sizes[j])}")
                out[: blk.shape[0], r0: r0 + row_sizes[i], c0: c0 + col_sizes[j]] = blk
            c0 += col_sizes[j]
        r0 += row_sizes[i]
    return out


def synthetic_division(stack: np.ndarray, root: complex) -> Tuple[np.ndarray, np.ndarray]:
    """
    Divide a polynomial matrix by (lam - root), entrywise

    Args:
        stack: Coefficient stack of degree d >= 1
        root: Root of the linear divisor

    Returns:
        (quotient stack of degree d - 1, remainder matrix)
    """
    d = stack.shape[0] - 1
    if d < 1:
        raise ParameterRangeError("Deflation needs a polynomial of degree at least 1")
    quotient = np.zeros((d,) + stack.shape[1:], dtype=complex)
    carry = stack[d].copy()
    for i in range(d - 1, -1, -1):
        quotient[i] = carry
        carry = stack[i] + root * carry
    return quotient, carry


def companion_pencil(stack: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    First Frobenius companion pencil lam*L1 + L0 of a square monomial polynomial

    Args:
        stack: Square coefficient stack of grade k >= 1

    Returns:
        (L0, L1), both of size k*n
    """
    k = stack.shape[0] - 1
    n = stack.shape[1]
    if stack.shape[1] != stack.shape[2]:
        raise DimensionMismatchError("Companion pencil needs square coefficients")
    if k < 1:
        raise ParameterRangeError("Companion pencil needs grade >= 1")
    L1 = np.eye(k * n, dtype=complex)
    L1[:n, :n] = stack[k]
    L0 = np.zeros((k * n, k * n), dtype=complex)
    for j in range(k):
        L0[:n, j * n:(j + 1) * n] = stack[k - 1 - j]
    for s in range(1, k):
        L0[s * n:(s + 1) * n, (s - 1) * n: s * n] = -np.eye(n)
    return L0, L1
