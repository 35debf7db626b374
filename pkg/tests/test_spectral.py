"""
Tests for the GEP backend, diagnostics, nullspaces and the end-to-end pipeline
"""
import numpy as np
import pytest

from src.errors import (
    BackwardErrorUndefinedError,
    DimensionMismatchError,
    ParameterRangeError,
    SingularPolynomialError,
)
from src.chebyshev import colleague_cheb
from src.newton import colleague_newton
from src.pencils import BlockPencil
from src.polycore import INFINITY, MatrixPolynomial, evaluate
from src.polycore.serialization import load_polynomial
from src.spectral import (
    backward_error,
    build_linearization,
    chordal_distance,
    convolution_matrix,
    degree_shifts,
    infer_family,
    match_spectra,
    monomial_oracle_spectrum,
    normal_rank,
    nullspace_minimal_basis,
    recover_minimal,
    reversal_infinite_count,
    solve_gep,
    solve_pep,
    verify_pencil,
    verify_strong_linearization,
)
from tests.helpers import KERNEL_INDEX_1, in_basis, planted_singular, random_nodes, random_stack


def infinite_demo():
    """diag(lam^2 + 1, lam + 2): eigenvalues +-i, -2 and one at infinity with vector e2"""
    coeffs = np.zeros((3, 2, 2))
    coeffs[0] = np.diag([1.0, 2.0])
    coeffs[1] = np.diag([0.0, 1.0])
    coeffs[2] = np.diag([1.0, 0.0])
    return MatrixPolynomial.monomial(coeffs)


class TestSolveGep:
    def test_finite_and_infinite(self):
        result = solve_gep(np.eye(2), np.diag([1.0, 0.0]))
        assert result.infinite_count == 1
        assert np.allclose(result.finite, [-1])

    def test_left_vectors(self, rng):
        L0, L1 = random_stack(rng, 1, 4, 4)
        result = solve_gep(L0, L1, want_left=True)
        for j, lam in enumerate(result.eigenvalues):
            Lz = lam * L1 + L0
            assert np.linalg.norm(Lz @ result.right[:, j]) < 1e-10 * np.linalg.norm(Lz)
            assert np.linalg.norm(result.left[:, j] @ Lz) < 1e-10 * np.linalg.norm(Lz)

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            solve_gep(np.eye(2), np.eye(3))
        with pytest.raises(DimensionMismatchError):
            solve_gep(np.ones((2, 3)), np.ones((2, 3)))


class TestBackwardError:
    def test_exact_eigenpair(self, newton_demo):
        assert backward_error(newton_demo, 1j, [1.0]) == pytest.approx(0.0, abs=1e-15)

    def test_infinite_uses_reversal(self):
        P = infinite_demo()
        assert backward_error(P, INFINITY, [0.0, 1.0]) == pytest.approx(0.0)
        # ||diag(1, 0) e1|| / (||P_0|| + ||P_1|| + ||P_2||) = 1 / (2 + 1 + 1)
        assert backward_error(P, INFINITY, [1.0, 0.0]) == pytest.approx(0.25)

    def test_left_side(self, newton_demo):
        assert backward_error(newton_demo, -1j, [2.0], "left") == pytest.approx(0.0, abs=1e-15)

    def test_rejects_bad_vectors(self, newton_demo):
        with pytest.raises(ParameterRangeError):
            backward_error(newton_demo, 0.5, [0.0])
        with pytest.raises(DimensionMismatchError):
            backward_error(newton_demo, 0.5, [1.0, 1.0])

    def test_zero_polynomial(self):
        with pytest.raises(BackwardErrorUndefinedError):
            backward_error(MatrixPolynomial.monomial([[[0]], [[0]]]), 0.5, [1.0])


class TestChordal:
    def test_values(self):
        assert chordal_distance(INFINITY, INFINITY) == 0.0
        assert chordal_distance(INFINITY, 0) == pytest.approx(1.0)
        assert chordal_distance(1, -1) == pytest.approx(1.0)
        assert chordal_distance(0.3j, 0.3j) == 0.0

    def test_match_spectra(self):
        ok, worst = match_spectra([1, INFINITY], [INFINITY, 1 + 1e-12])
        assert ok and worst < 1e-11
        assert match_spectra([1, 2], [1]) == (False, float("inf"))
        assert match_spectra([], []) == (True, 0.0)
        assert not match_spectra([1, 2], [1, 2.5])[0]


class TestOracle:
    def test_quadratic_demo(self, demo_dir):
        # det P = lam (lam + 1) (lam^2 - lam + 3)
        P = load_polynomial(demo_dir / "quadratic_2x2.json")
        expected = [0, -1, (1 + 1j * np.sqrt(11)) / 2, (1 - 1j * np.sqrt(11)) / 2]
        assert match_spectra(monomial_oracle_spectrum(P), expected)[0]

    def test_infinite_count(self):
        assert reversal_infinite_count(infinite_demo()) == 1
        spectrum = monomial_oracle_spectrum(infinite_demo())
        assert int(np.sum(np.isinf(spectrum))) == 1


class TestGradeAboveDegree:
    @pytest.mark.parametrize("basis", ["newton", "chebyshev"])
    @pytest.mark.parametrize("gap", [1, 2, 3])
    @pytest.mark.parametrize("param", [0, 1])
    def test_zero_trailing_coefficients_sit_at_infinity(self, rng, basis, gap, param):
        n, degree = 2, 2
        k = degree + gap
        coeffs = random_stack(rng, k, n, n)
        coeffs[degree + 1:] = 0
        if basis == "newton":
            P = MatrixPolynomial.newton(random_nodes(rng, k), coeffs)
        else:
            P = MatrixPolynomial.chebyshev(coeffs, 1)

        assert reversal_infinite_count(P) == n * gap
        lin = build_linearization(P, param=param)
        assert solve_gep(lin.pencil.L0, lin.pencil.L1).infinite_count == n * gap
        report = verify_strong_linearization(lin, P)
        assert report.passed, report.failed


class TestSolvePep:
    @pytest.mark.parametrize("mu", [0, 1])
    def test_quadratic_demo(self, demo_dir, mu):
        P = load_polynomial(demo_dir / "quadratic_2x2.json")
        solution = solve_pep(P, param=mu, want_left=True)
        assert len(solution) == 4
        assert abs(solution.pairs[0].value) < 1e-10
        assert solution.pairs[1].value == pytest.approx(-1)
        assert solution.max_residual < 1e-12
        assert all(p.residual_left < 1e-12 for p in solution.pairs)

    @pytest.mark.parametrize("basis", ["newton", "lagrange", "chebyshev"])
    def test_every_family_matches_oracle(self, rng, basis):
        P_mono = MatrixPolynomial.monomial(random_stack(rng, 3, 3, 3))
        P = in_basis(P_mono, basis, rng)
        solution = solve_pep(P, param=1)
        ok, worst = match_spectra(solution.eigenvalues, monomial_oracle_spectrum(P_mono))
        assert ok, worst
        assert solution.max_residual < 1e-10

    def test_infinite_eigenvector(self):
        solution = solve_pep(infinite_demo())
        assert len(solution) == 4
        last = solution.pairs[-1]
        assert last.is_infinite
        assert abs(last.right[0]) < 1e-10 * abs(last.right[1])
        assert last.to_dict()["lambda"] == "inf"
        assert solution.max_residual < 1e-12

    def test_rectangular_is_singular(self, demo_dir):
        with pytest.raises(SingularPolynomialError):
            solve_pep(load_polynomial(demo_dir / "singular_1_lambda.json"))

    def test_square_singular(self):
        P = MatrixPolynomial.monomial([np.zeros((2, 2)), np.diag([1.0, 0.0])])
        with pytest.raises(SingularPolynomialError):
            solve_pep(P)


class TestNullspace:
    def test_one_lambda(self):
        P = MatrixPolynomial.monomial([[[1, 0]], [[0, 1]]])
        basis = nullspace_minimal_basis(P, "right")
        assert list(basis.degrees) == [1]
        for lam in (0.5, -2 + 1j):
            assert np.allclose(evaluate(P, lam) @ basis.evaluate(lam), 0)
        assert len(nullspace_minimal_basis(P, "left")) == 0

    def test_zero_polynomial(self):
        basis = nullspace_minimal_basis(MatrixPolynomial.monomial([[[0]], [[0]]]), "right")
        assert list(basis.degrees) == [0]
        assert np.allclose(basis.vectors[0], [[1]])

    def test_pencil_target(self, demo_dir):
        P = load_polynomial(demo_dir / "singular_1_lambda.json")
        pencil = colleague_newton(P, 0).pencil
        assert list(nullspace_minimal_basis(pencil, "right").degrees) == [1]

    def test_normal_rank(self, demo_dir):
        assert normal_rank(load_polynomial(demo_dir / "singular_1_lambda.json")) == 1
        assert normal_rank(load_polynomial(demo_dir / "quadratic_2x2.json")) == 2

    def test_convolution_matrix_shape(self):
        stack = np.ones((2, 1, 2))
        assert convolution_matrix(stack, 3).shape == (5, 8)


class TestPipeline:
    def test_infer_family(self, newton_demo, lagrange_demo, cheb_demo):
        assert infer_family(MatrixPolynomial.monomial([[[1]], [[1]]])) == "newton"
        assert infer_family(newton_demo) == "newton"
        assert infer_family(lagrange_demo) == "lagrange"
        assert infer_family(cheb_demo) == "chebyshev"

    def test_family_must_match_basis(self, cheb_demo):
        with pytest.raises(ParameterRangeError):
            build_linearization(cheb_demo, "newton")
        with pytest.raises(ParameterRangeError):
            build_linearization(cheb_demo, "hermite")

    def test_degree_shifts(self, rng):
        P = MatrixPolynomial.chebyshev(random_stack(rng, 4, 1, 1), 1)
        assert degree_shifts(colleague_cheb(P, 1)) == (1, 2)
        Q = MatrixPolynomial.newton([0, 1, 2, 3], random_stack(rng, 4, 1, 1))
        assert degree_shifts(colleague_newton(Q, 1)) == (2, 1)

    def test_verify_pencil(self, newton_demo):
        pencil = colleague_newton(newton_demo, 0).pencil
        assert verify_pencil(pencil, newton_demo).passed

    def test_verify_pencil_catches_corruption(self, newton_demo):
        doc = colleague_newton(newton_demo, 0).pencil.to_dict()
        doc["L0"][0][0][0] += 1e-2
        report = verify_pencil(BlockPencil.from_dict(doc), newton_demo)
        assert report["DUALITY_K1"].passed
        assert not report["D2MD1T_IDENTITY"].passed
        assert not report.passed

    @pytest.mark.parametrize("basis", ["newton", "lagrange", "chebyshev"])
    def test_minimal_indices_do_not_depend_on_family(self, rng, basis):
        P = in_basis(planted_singular(rng, KERNEL_INDEX_1, 3), basis, rng)
        lin = build_linearization(P, param=1)
        pencil_basis = nullspace_minimal_basis(lin.pencil, "right")
        _, indices = recover_minimal(lin, pencil_basis, "right")
        assert indices == [1]
