"""
Tests for bases, evaluation, reversal and the JSON format
"""
import numpy as np
import pytest

from src.errors import DuplicateNodesError, ParameterRangeError, SchemaError
from src.polycore import (
    BasisKind,
    MatrixPolynomial,
    NodeSet,
    chebyshev_identity_defects,
    chebyshev_value,
    evaluate,
    gamma,
    newton_aux,
    polynomial_from_dict,
    polynomial_to_dict,
    reverse,
    to_monomial,
)
from src.polycore import arithmetic
from src.polycore.serialization import load_polynomial
from tests.helpers import random_nodes, random_stack


def scalar(p: MatrixPolynomial, lam) -> complex:
    return complex(evaluate(p, lam)[0, 0])


class TestEvaluate:
    def test_newton_hand_values(self, newton_demo):
        assert scalar(newton_demo, 2) == pytest.approx(5)
        assert scalar(newton_demo, 0) == pytest.approx(1)

    def test_chebyshev_at_one(self, cheb_demo):
        assert scalar(cheb_demo, 1) == pytest.approx(1)

    def test_lagrange_returns_sample(self):
        p = MatrixPolynomial.lagrange([0, 1, 2], [[[1]], [[2]], [[5]]])
        assert scalar(p, 1) == 2

    def test_lagrange_node_is_bit_exact(self, rng):
        nodes = random_nodes(rng, 4)
        samples = random_stack(rng, 3, 2, 2)
        p = MatrixPolynomial.lagrange(nodes, samples)
        for i, x in enumerate(nodes):
            assert np.array_equal(evaluate(p, x), samples[i])

    @pytest.mark.parametrize("basis", ["newton", "lagrange", "chebyshev1", "chebyshev2"])
    def test_matches_monomial_form(self, rng, basis):
        k, m, n = 4, 2, 3
        coeffs = random_stack(rng, k, m, n)
        if basis == "newton":
            p = MatrixPolynomial.newton(random_nodes(rng, k), coeffs)
        elif basis == "lagrange":
            p = MatrixPolynomial.lagrange(random_nodes(rng, k + 1), coeffs)
        else:
            p = MatrixPolynomial.chebyshev(coeffs, int(basis[-1]))
        mono = to_monomial(p)
        for lam in rng.standard_normal(10) + 1j * rng.standard_normal(10):
            expected = evaluate(p, lam)
            assert np.linalg.norm(evaluate(mono, lam) - expected) <= 1e-9 * max(1, np.linalg.norm(expected))

    def test_rejects_infinity(self, newton_demo):
        with pytest.raises(ParameterRangeError):
            evaluate(newton_demo, complex(np.inf))


class TestReverse:
    def test_palindromic_monomial(self):
        p = MatrixPolynomial.monomial([[[1]], [[0]], [[1]]])
        assert np.allclose(reverse(p).coeffs.ravel(), [1, 0, 1])

    def test_newton_element(self):
        p = MatrixPolynomial.newton([0, 1], [[[0]], [[0]], [[1]]])
        assert np.allclose(reverse(p).coeffs.ravel(), [1, -1, 0])

    def test_chebyshev_t2(self, cheb_demo):
        assert np.allclose(reverse(cheb_demo).coeffs.ravel(), [2, 0, -1])

    def test_twice_is_identity(self, rng):
        p = MatrixPolynomial.monomial(random_stack(rng, 3, 2, 2))
        assert np.allclose(reverse(reverse(p)).coeffs, p.coeffs)

    def test_lagrange_matches_flip_of_monomial(self, rng):
        p = MatrixPolynomial.lagrange(random_nodes(rng, 4), random_stack(rng, 3, 1, 2))
        assert np.allclose(reverse(p).coeffs, to_monomial(p).coeffs[::-1])


class TestToMonomial:
    def test_newton(self, newton_demo):
        assert np.allclose(to_monomial(newton_demo).coeffs.ravel(), [1, 0, 1])

    def test_lagrange(self):
        p = MatrixPolynomial.lagrange([0, 1, 2], [[[0]], [[1]], [[4]]])
        assert np.allclose(to_monomial(p).coeffs.ravel(), [0, 0, 1])

    def test_chebyshev_second_kind(self):
        p = MatrixPolynomial.chebyshev([[[0]], [[1]]], 2)
        assert np.allclose(to_monomial(p).coeffs.ravel(), [0, 2])


class TestNewtonAux:
    def test_products(self):
        nodes = NodeSet([0, 1, 2])
        assert newton_aux(nodes, 1, 3, 3) == pytest.approx(6)
        assert newton_aux(nodes, 2, 1, 0.37) == 1
        assert gamma(nodes, 2, 1) == 0

    @pytest.mark.parametrize("i, j", [(1, 4), (4, 3), (1, 0), (0, 2)])
    def test_index_out_of_range(self, i, j):
        with pytest.raises(ParameterRangeError):
            newton_aux(NodeSet([0, 1, 2]), i, j, 0.5)


class TestNodeSet:
    def test_duplicates_rejected(self):
        with pytest.raises(DuplicateNodesError):
            NodeSet([0, 1, 0])

    def test_weights(self):
        assert np.allclose(NodeSet([0, 1, 2]).weights, [0.5, -1, 0.5])

    def test_grade_needs_matching_node_count(self):
        with pytest.raises(ParameterRangeError):
            MatrixPolynomial.newton([0, 1, 2], [[[1]], [[1]], [[1]]])


class TestChebyshev:
    def test_product_identities(self, rng):
        for lam in rng.standard_normal(10) + 1j * rng.standard_normal(10):
            scale = (1.0 + 2 * abs(lam)) ** 13
            for r in range(1, 7):
                for l in range(1, 7):
                    assert np.all(chebyshev_identity_defects(r, l, lam) <= 1e-12 * scale)

    def test_negative_indices(self):
        lam = 0.3 + 0.2j
        assert chebyshev_value(-3, lam, 1) == pytest.approx(chebyshev_value(3, lam, 1))
        assert chebyshev_value(-1, lam, 2) == 0
        assert chebyshev_value(-3, lam, 2) == pytest.approx(-chebyshev_value(1, lam, 2))


class TestArithmetic:
    def test_matmul_degree_adds(self):
        a = np.array([[[1]], [[1]]], dtype=complex)  # 1 + lam
        b = np.array([[[-1]], [[1]]], dtype=complex)  # lam - 1
        assert np.allclose(arithmetic.matmul(a, b).ravel(), [-1, 0, 1])

    def test_synthetic_division(self):
        stack = np.array([[[-2]], [[1]], [[1]]], dtype=complex)  # (lam + 2)(lam - 1)
        quotient, remainder = arithmetic.synthetic_division(stack, 1.0)
        assert np.allclose(quotient.ravel(), [2, 1])
        assert np.allclose(remainder, 0)

    def test_trim_and_degree(self):
        stack = np.zeros((4, 1, 1), dtype=complex)
        stack[1] = 1
        assert arithmetic.degree(stack) == 1
        assert arithmetic.trim(stack).shape[0] == 2
        assert arithmetic.degree(np.zeros((2, 1, 1))) == -1


class TestSerialization:
    def test_round_trip_lagrange(self, rng):
        p = MatrixPolynomial.lagrange(random_nodes(rng, 3), random_stack(rng, 2, 2, 1))
        q = polynomial_from_dict(polynomial_to_dict(p))
        assert q.kind is BasisKind.LAGRANGE
        assert np.array_equal(q.coeffs, p.coeffs)
        assert np.array_equal(q.nodes.points, p.nodes.points)

    def test_missing_key(self):
        with pytest.raises(SchemaError):
            polynomial_from_dict({"basis": "monomial", "grade": 0, "size": [1, 1]})

    def test_wrong_weights(self):
        doc = polynomial_to_dict(MatrixPolynomial.lagrange([0, 1], [[[1]], [[3]]]))
        doc["weights"] = [[5.0, 0.0], [1.0, 0.0]]
        with pytest.raises(SchemaError):
            polynomial_from_dict(doc)

    def test_nodes_on_chebyshev_rejected(self):
        doc = polynomial_to_dict(MatrixPolynomial.chebyshev([[[1]]], 1))
        doc["nodes"] = [[0.0, 0.0]]
        with pytest.raises(SchemaError):
            polynomial_from_dict(doc)

    def test_demo_files_load(self, demo_dir):
        for path in sorted(demo_dir.glob("*.json")):
            p = load_polynomial(path)
            assert p.grade >= 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_polynomial(tmp_path / "absent.json")
