"""
Tests for interpolation nodes, fitting and the demo functions
"""
import json
import threading

import numpy as np
import pytest

from src.errors import DimensionMismatchError, ParameterRangeError, SchemaError
from src.interp import (
    SampledFunction,
    chebyshev_coefficients,
    chebyshev_nodes,
    demo_function,
    divided_differences,
    lagrange_sample,
    polynomial_function,
    sample_deviation,
)
from src.polycore import BasisKind, MatrixPolynomial, evaluate, to_monomial
from src.polycore.serialization import polynomial_to_dict
from tests.helpers import random_nodes, random_stack, relative_stack_error


def square(lam):
    return np.array([[lam ** 2]])


class TestNodes:
    def test_first_kind(self):
        assert np.allclose(chebyshev_nodes(2, 1).points, np.cos(np.pi * np.array([1, 3, 5]) / 6))

    def test_second_kind(self):
        assert np.allclose(chebyshev_nodes(2, 2).points, [1, 0, -1])

    def test_ranges(self):
        with pytest.raises(ParameterRangeError):
            chebyshev_nodes(0)
        with pytest.raises(ParameterRangeError):
            chebyshev_nodes(3, 3)


class TestFitting:
    def test_divided_differences(self):
        P = divided_differences(square, [0, 1, 2])
        assert P.kind is BasisKind.NEWTON
        assert np.allclose(P.coeffs.ravel(), [0, 1, 1])
        assert np.allclose(P.nodes.points, [0, 1])

    def test_lagrange_sample(self):
        P = lagrange_sample(square, [0, 1, 2])
        assert np.allclose(P.coeffs.ravel(), [0, 1, 4])

    def test_chebyshev_first_kind(self):
        P = chebyshev_coefficients(lambda lam: np.array([[lam ** 3]]), 3)
        assert np.allclose(P.coeffs.ravel(), [0, 0.75, 0, 0.25])

    def test_chebyshev_second_kind(self):
        # lam^2 = (U_2 + U_0) / 4
        P = chebyshev_coefficients(square, 2, kind=2)
        assert np.allclose(P.coeffs.ravel(), [0.25, 0, 0.25])

    def test_node_kind_does_not_change_result(self):
        P = chebyshev_coefficients(lambda lam: np.array([[2 * lam ** 2 - 1]]), 2, node_kind=2)
        assert np.allclose(P.coeffs.ravel(), [0, 0, 1])

    def test_grade_zero(self):
        P = chebyshev_coefficients(lambda lam: np.array([[3.0]]), 0)
        assert np.allclose(P.coeffs.ravel(), [3])

    def test_chebyshev_ranges(self):
        with pytest.raises(ParameterRangeError):
            chebyshev_coefficients(square, -1)
        with pytest.raises(ParameterRangeError):
            chebyshev_coefficients(square, 2, kind=3)

    def test_every_basis_gives_the_same_polynomial(self, rng):
        P = MatrixPolynomial.monomial(random_stack(rng, 3, 2, 2))
        T = polynomial_function(P)
        fits = [
            divided_differences(T, random_nodes(rng, 4)),
            lagrange_sample(T, random_nodes(rng, 4)),
            chebyshev_coefficients(T, 3, 1),
            chebyshev_coefficients(T, 3, 2),
        ]
        for fit in fits:
            assert relative_stack_error(to_monomial(fit).coeffs, P.coeffs) < 1e-9

    def test_exp_is_well_approximated(self):
        T = demo_function("exp")
        P = chebyshev_coefficients(T, 10)
        assert sample_deviation(T, P, np.linspace(-1, 1, 41)) < 1e-9


class TestSampledFunction:
    def test_reentrant_uses_threads(self):
        seen = set()

        def record(lam):
            seen.add(threading.get_ident())
            return np.array([[lam]])

        values = SampledFunction(record, reentrant=True).sample([0.1, 0.2, 0.3, 0.4])
        assert np.allclose(values.ravel(), [0.1, 0.2, 0.3, 0.4])
        assert threading.get_ident() not in seen

    def test_sequential_keeps_order(self):
        values = SampledFunction(lambda lam: [[lam, 2 * lam]]).sample([1, 2])
        assert values.shape == (2, 1, 2)
        assert np.allclose(values[1], [[2, 4]])

    def test_shape_mismatch(self):
        T = SampledFunction(lambda lam: np.ones((1, 1)) if lam.real < 0.5 else np.ones((2, 1)))
        with pytest.raises(DimensionMismatchError):
            T.sample([0.0, 1.0])


class TestDemoFunction:
    def test_exp(self):
        assert demo_function("exp")(0.0)[0, 0] == pytest.approx(1.0)

    def test_poly_from_file(self, demo_dir):
        T = demo_function(f"poly:{demo_dir / 'newton_lambda2_plus_1.json'}")
        assert T(2.0)[0, 0] == pytest.approx(5.0)

    def test_poly_inline(self, newton_demo):
        T = demo_function("poly:" + json.dumps(polynomial_to_dict(newton_demo)))
        assert np.allclose(T(0.5), evaluate(newton_demo, 0.5))

    def test_bad_inline_json(self):
        with pytest.raises(SchemaError):
            demo_function("poly:{not json")

    def test_unknown_name(self):
        with pytest.raises(ParameterRangeError):
            demo_function("sin")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            demo_function(f"poly:{tmp_path / 'absent.json'}")
