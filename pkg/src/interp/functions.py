"""
Matrix-valued functions to interpolate, and the built-in demos
"""
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Tuple

import numpy as np

from src.errors import DimensionMismatchError, ParameterRangeError, SchemaError
from src.polycore.matrix_polynomial import MatrixPolynomial, evaluate
from src.polycore.serialization import load_polynomial, polynomial_from_dict

logger = logging.getLogger(__name__)

MAX_WORKERS = 4


@dataclass(frozen=True)
class SampledFunction:
    """T(lam) given by a callback; reentrant callbacks may be sampled concurrently"""

    evaluator: Callable[[complex], np.ndarray]
    domain: Tuple[float, float] = (-1.0, 1.0)
    reentrant: bool = False

    def __call__(self, lam: complex) -> np.ndarray:
        return np.atleast_2d(np.asarray(self.evaluator(complex(lam)), dtype=complex))

    def sample(self, points: Iterable[complex]) -> np.ndarray:
        """
        Evaluate at every point

        Args:
            points: Sample points

        Returns:
            Stack of shape (len(points), m, n)
        """
        points = [complex(z) for z in points]
        if self.reentrant and len(points) > 1:
            with ThreadPoolExecutor(max_workers=min(MAX_WORKERS, len(points))) as pool:
                values = list(pool.map(self, points))
        else:
            values = [self(z) for z in points]
        shapes = {v.shape for v in values}
        if len(shapes) > 1:
            raise DimensionMismatchError(f"Sampled values have differing shapes {sorted(shapes)}")
        return np.stack(values)


def as_sampled(T) -> SampledFunction:
    return T if isinstance(T, SampledFunction) else SampledFunction(T)


def polynomial_function(P: MatrixPolynomial) -> SampledFunction:
    """A stored polynomial viewed as a (reentrant) matrix function"""
    return SampledFunction(lambda lam: evaluate(P, lam), reentrant=True)


def demo_function(name: str) -> SampledFunction:
    """
    Look up a built-in demo function

    Args:
        name: "exp" for the scalar e^lam, or "poly:<path or inline JSON>"

    Returns:
        SampledFunction
    """
    if name == "exp":
        return SampledFunction(lambda lam: np.array([[np.exp(lam)]]), reentrant=True)
    if name.startswith("poly:"):
        source = name[len("poly:"):]
        if source.lstrip().startswith("{"):
            try:
                doc = json.loads(source)
            except json.JSONDecodeError as e:
                raise SchemaError(f"Inline polynomial is not valid JSON: {str(e)}") from e
            return polynomial_function(polynomial_from_dict(doc))
        return polynomial_function(load_polynomial(Path(source)))
    raise ParameterRangeError(f"Unknown demo function '{name}'. Use 'exp' or 'poly:<path or json>'")


def sample_deviation(T, P: MatrixPolynomial, grid: Iterable[complex]) -> float:
    """
    Largest ||T(z) - P(z)||_2 over a grid; a diagnostic, not an accuracy claim

    Args:
        T: Matrix function
        P: Interpolant
        grid: Points to compare at

    Returns:
        Maximum deviation
    """
    T = as_sampled(T)
    worst = 0.0
    for z in grid:
        worst = max(worst, float(np.linalg.norm(T(z) - evaluate(P, z), 2)))
    logger.info(f"Max sampled deviation {worst:.3e}")
    return worst
