"""
Result records of the spectral layer
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.polycore.matrix_polynomial import is_infinite
from src.polycore.serialization import complex_to_json, vector_to_json


@dataclass(frozen=True, eq=False)
class GEPResult:
    """Homogeneous eigenvalues (alpha, beta) of lam*L1 + L0 with their vectors"""

    alpha: np.ndarray
    beta: np.ndarray
    eigenvalues: np.ndarray
    right: np.ndarray
    left: Optional[np.ndarray] = None
    indeterminate: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=bool))

    def __len__(self) -> int:
        return len(self.eigenvalues)

    @property
    def finite(self) -> np.ndarray:
        return self.eigenvalues[~np.isinf(self.eigenvalues)]

    @property
    def infinite_count(self) -> int:
        return int(np.sum(np.isinf(self.eigenvalues)))


@dataclass(frozen=True, eq=False)
class EigenPair:
    value: complex
    right: np.ndarray
    left: Optional[np.ndarray] = None
    residual_right: float = 0.0
    residual_left: Optional[float] = None
    recovered_from: int = 1

    @property
    def is_infinite(self) -> bool:
        return is_infinite(self.value)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": "inf" if self.is_infinite else complex_to_json(self.value),
            "right": vector_to_json(self.right),
            "left": None if self.left is None else vector_to_json(self.left),
            "residual": float(self.residual_right),
            "residual_left": None if self.residual_left is None else float(self.residual_left),
            "recovered_from": int(self.recovered_from),
        }


def eigenvalue_order(value: complex) -> Tuple[int, float, float]:
    """Sort key: ascending modulus, ties by argument, INFINITY last"""
    if is_infinite(value):
        return 1, 0.0, 0.0
    return 0, round(abs(value), 12), float(np.angle(value))


@dataclass(frozen=True, eq=False)
class EigenSolution:
    """Eigenpairs of P recovered from one linearization"""

    pairs: Tuple[EigenPair, ...]
    family: str
    param: int

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([p.value for p in self.pairs], dtype=complex)

    @property
    def max_residual(self) -> float:
        return max((p.residual_right for p in self.pairs), default=0.0)

    def sorted(self) -> "EigenSolution":
        ordered = sorted(self.pairs, key=lambda p: eigenvalue_order(p.value))
        return EigenSolution(tuple(ordered), self.family, self.param)

    def to_json(self) -> List[Dict[str, Any]]:
        return [p.to_dict() for p in self.sorted().pairs]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    defect: float
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": bool(self.passed), "defect": float(self.defect), "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    """Named pass/fail checks with their measured defects"""

    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}
