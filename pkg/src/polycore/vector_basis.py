"""
Bases of vector polynomials (minimal bases of rational nullspaces)
"""
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.errors import ParameterRangeError
from src.polycore import arithmetic

SIDES = ("right", "left")
CERTIFICATES = ("deterministic", "probabilistic")


@dataclass(frozen=True, eq=False)
class PolyVectorBasis:
    """Vector polynomials stored as monomial coefficients, sorted by degree"""

    vectors: Tuple[np.ndarray, ...]
    degrees: Tuple[int, ...]
    side: str
    certificate: str = "probabilistic"

    def __post_init__(self):
        if self.side not in SIDES:
            raise ParameterRangeError(f"side must be one of {SIDES}, got {self.side!r}")
        if self.certificate not in CERTIFICATES:
            raise ParameterRangeError(f"certificate must be one of {CERTIFICATES}, got {self.certificate!r}")
        if len(self.vectors) != len(self.degrees):
            raise ParameterRangeError("Each vector needs exactly one degree")
        order = sorted(range(len(self.degrees)), key=lambda i: self.degrees[i])
        vectors = tuple(np.array(self.vectors[i], dtype=complex) for i in order)
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "degrees", tuple(int(self.degrees[i]) for i in order))

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def size(self) -> int:
        """Length of each vector (0 for an empty basis)"""
        return self.vectors[0].shape[1] if self.vectors else 0

    def evaluate(self, lam: complex) -> np.ndarray:
        """
        Evaluate all vectors at lam

        Args:
            lam: Evaluation point

        Returns:
            Matrix whose columns are the vectors at lam
        """
        if not self.vectors:
            return np.zeros((0, 0), dtype=complex)
        cols = [arithmetic.evaluate(v[:, :, np.newaxis], lam)[:, 0] for v in self.vectors]
        return np.column_stack(cols)

    def to_dict(self) -> Dict:
        return {
            "side": self.side,
            "certificate": self.certificate,
            "degrees": list(self.degrees),
            "vectors": [[[[float(z.real), float(z.imag)] for z in row] for row in v] for v in self.vectors],
        }


def from_vectors(vectors: Sequence[np.ndarray], side: str, certificate: str = "probabilistic",
                 tol: float = 0.0) -> PolyVectorBasis:
    """
    Build a basis, reading each degree off the trimmed coefficients

    Args:
        vectors: Coefficient arrays of shape (d + 1, size)
        side: "right" or "left"
        certificate: Certificate kind of the source
        tol: Relative tolerance for trailing-coefficient trimming

    Returns:
        PolyVectorBasis
    """
    trimmed: List[np.ndarray] = []
    degrees: List[int] = []
    for v in vectors:
        stack = np.asarray(v, dtype=complex)[:, :, np.newaxis]
        d = max(arithmetic.degree(stack, tol), 0)
        trimmed.append(stack[: d + 1, :, 0])
        degrees.append(d)
    return PolyVectorBasis(tuple(trimmed), tuple(degrees), side, certificate)
