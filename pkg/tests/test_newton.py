"""
Tests for Newton linearizations, Horner shifts and recovery
"""
import numpy as np
import pytest

from src.errors import DimensionMismatchError, ParameterRangeError
from src.newton import (
    build_K_D_newton,
    colleague_newton,
    family_newton,
    newton_horner,
    newton_horner_direct,
    newton_horner_polynomial,
    one_sided_newton,
    recover_eigvec_newton,
    recover_minimal_newton,
)
from src.pencils import DualPair, body_product, check_duality, is_minimal_basis
from src.polycore import INFINITY, MatrixPolynomial, evaluate, to_monomial
from src.polycore import arithmetic
from src.spectral import nullspace_minimal_basis, solve_gep, verify_linearization
from tests.helpers import KERNEL_INDEX_1, PLANTED, planted_singular, random_nodes, random_stack, transposed


def random_newton(rng, k, m, n):
    return MatrixPolynomial.newton(random_nodes(rng, k), random_stack(rng, k, m, n))


class TestColleague:
    def test_demo_pencil(self, newton_demo):
        pencil = colleague_newton(newton_demo, 0).pencil
        assert np.allclose(pencil.L0, [[0, 1], [-1, 0]])
        assert np.allclose(pencil.L1, np.eye(2))
        assert pencil.family == "newton" and pencil.param == 0

    def test_demo_dual_bases(self):
        K1, D1, K2, D2 = build_K_D_newton([0, 1], 2, 0, 1, 1)
        assert np.allclose(K1.coeffs[0], [[-1, 0]]) and np.allclose(K1.coeffs[1], [[0, 1]])
        assert np.allclose(D1.coeffs[0], [[0, 1]]) and np.allclose(D1.coeffs[1], [[1, 0]])
        assert np.allclose(D2.coeffs.ravel(), [1])

    def test_demo_eigenvalues(self, newton_demo):
        pencil = colleague_newton(newton_demo, 0).pencil
        eigs = solve_gep(pencil.L0, pencil.L1).eigenvalues
        assert np.allclose(eigs[np.argsort(eigs.imag)], [-1j, 1j])

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_identity_for_every_mu(self, rng, k):
        P = random_newton(rng, k, 2, 3)
        target = to_monomial(P).coeffs
        for mu in range(k):
            lin = colleague_newton(P, mu)
            product = body_product(lin.pencil.body(), lin.D1, lin.D2).coeffs
            assert np.allclose(product, target, atol=1e-10)

    def test_sizes(self, rng):
        k, m, n, mu = 4, 2, 3, 1
        pencil = colleague_newton(random_newton(rng, k, m, n), mu).pencil
        assert pencil.shape == ((mu + 1) * m + (k - mu - 1) * n, (k - mu) * n + mu * m)
        assert pencil.row_blocks == (2, 2, 3, 3)
        assert pencil.col_blocks == (3, 3, 3, 2)

    def test_monomial_input_uses_zero_nodes(self, rng):
        coeffs = random_stack(rng, 3, 2, 2)
        mono = colleague_newton(MatrixPolynomial.monomial(coeffs), 1)
        newton = colleague_newton(MatrixPolynomial.newton([0, 0.5, 0.25], coeffs), 1)
        assert mono.pencil.shape == newton.pencil.shape
        assert np.allclose(body_product(mono.pencil.body(), mono.D1, mono.D2).coeffs, coeffs)

    def test_mu_out_of_range(self, newton_demo):
        with pytest.raises(ParameterRangeError):
            colleague_newton(newton_demo, 2)

    def test_rejects_chebyshev_input(self, cheb_demo):
        with pytest.raises(ParameterRangeError):
            colleague_newton(cheb_demo, 0)


class TestDualBases:
    @pytest.mark.parametrize("k,mu", [(2, 0), (3, 1), (4, 0), (4, 3), (5, 2)])
    def test_dual_and_minimal(self, rng, k, mu):
        K1, D1, K2, D2 = build_K_D_newton(random_nodes(rng, k - 1), k, mu, 2, 1)
        assert check_duality(DualPair(K1, D1, "newton", mu, 2))
        assert check_duality(DualPair(K2, D2, "newton", mu, 1))
        for basis in (K1, D1, K2, D2):
            if basis.rows:
                assert is_minimal_basis(basis)

    def test_repeated_nodes_allowed(self):
        K1, D1, _, _ = build_K_D_newton([0.5, 0.5, 0.5], 4, 0, 1, 1)
        assert check_duality(DualPair(K1, D1, "newton", 0, 1))

    def test_too_few_nodes(self):
        with pytest.raises(ParameterRangeError):
            build_K_D_newton([0.5], 4, 0, 1, 1)


class TestFamily:
    def test_constants_keep_identity_and_spectrum(self, rng):
        k, m, n, mu = 4, 2, 2, 1
        P = random_newton(rng, k, m, n)
        A = rng.standard_normal(((mu + 1) * m, (k - mu - 1) * n))
        B = rng.standard_normal((mu * m, (k - mu) * n))
        lin = family_newton(P, mu, A, B)
        report = verify_linearization(lin)
        assert report.passed, report.failed

    def test_wrong_shape(self, newton_demo):
        with pytest.raises(DimensionMismatchError):
            family_newton(newton_demo, 0, A=np.ones((2, 2)))


class TestHorner:
    def test_first_shift(self, newton_demo):
        assert newton_horner(newton_demo, 1, 0.7)[0, 0] == pytest.approx(0.7)

    def test_last_shift_is_P(self, rng):
        P = random_newton(rng, 4, 2, 2)
        lam = 0.4 - 0.9j
        assert np.allclose(newton_horner(P, 4, lam), evaluate(P, lam))

    def test_recurrence_matches_direct_sum(self, rng):
        P = random_newton(rng, 5, 1, 2)
        for i in range(1, 6):
            for lam in (0.3, -1.2 + 0.5j):
                expected = newton_horner_direct(P, i, lam)
                assert np.allclose(newton_horner(P, i, lam), expected)
                assert np.allclose(arithmetic.evaluate(newton_horner_polynomial(P, i), lam), expected)

    def test_index_range(self, newton_demo):
        with pytest.raises(ParameterRangeError):
            newton_horner(newton_demo, 3, 0.0)


class TestOneSided:
    def test_demo_right_factor(self, newton_demo):
        lin = colleague_newton(newton_demo, 0)
        H, G, r, c = one_sided_newton(newton_demo, 0)
        assert (r, c) == (1, 2)
        Hz = arithmetic.evaluate(H.coeffs, 2.0)
        assert np.allclose(Hz.ravel(), [2, 1])
        assert np.allclose(lin.pencil.evaluate(2.0) @ Hz, [[5], [0]])

    @pytest.mark.parametrize("mu", [0, 1, 2, 3])
    def test_factorizations(self, rng, mu):
        P = random_newton(rng, 4, 2, 3)
        report = verify_linearization(colleague_newton(P, mu))
        assert report["RIGHT_FACTORIZATION"].passed
        assert report["LEFT_FACTORIZATION"].passed


class TestRecovery:
    def test_demo_right_eigenvector(self, newton_demo):
        lin = colleague_newton(newton_demo, 0)
        z = np.array([1, -1j])
        assert np.allclose(lin.pencil.evaluate(1j) @ z, 0)
        recovered = recover_eigvec_newton(lin, 1j, z, "right")
        assert recovered.block == 2
        assert np.allclose(recovered.vector, [-1j])

    def test_random_pairs(self, rng):
        k, n, mu = 3, 3, 1
        P = random_newton(rng, k, n, n)
        lin = colleague_newton(P, mu)
        result = solve_gep(lin.pencil.L0, lin.pencil.L1, want_left=True)
        for j, lam in enumerate(result.eigenvalues):
            x = recover_eigvec_newton(lin, lam, result.right[:, j], "right").vector
            y = recover_eigvec_newton(lin, lam, result.left[:, j], "left").vector
            Pz = evaluate(P, lam)
            scale = sum(np.linalg.norm(c) * abs(lam) ** i for i, c in enumerate(to_monomial(P).coeffs))
            assert np.linalg.norm(Pz @ x) <= 1e-8 * scale * np.linalg.norm(x)
            assert np.linalg.norm(y @ Pz) <= 1e-8 * scale * np.linalg.norm(y)

    def test_eigenvalue_on_node_drops_blocks(self):
        # P = (lam - 1) * lam * (lam - 2) on nodes {1, 0, 2}: eigenvalue 1 = x_1
        P = MatrixPolynomial.newton([1, 0, 2], [[[0]], [[0]], [[0]], [[1]]])
        lin = colleague_newton(P, 0)
        z = np.array([0.0, 0.0, 1.0])
        assert np.allclose(lin.pencil.evaluate(1.0) @ z, 0)
        recovered = recover_eigvec_newton(lin, 1.0, z, "right")
        assert recovered.block == 3
        assert recovered.unreliable_blocks == (1, 2)

    def test_infinite_eigenvalue_reads_first_block(self):
        # leading coefficient diag(1, 0) gives one infinite eigenvalue with eigenvector e2
        coeffs = np.zeros((3, 2, 2))
        coeffs[2] = np.diag([1.0, 0.0])
        coeffs[1] = np.diag([0.0, 1.0])
        coeffs[0] = np.eye(2) * 2
        lin = colleague_newton(MatrixPolynomial.monomial(coeffs), 0)
        z = np.zeros(4)
        z[1] = 1.0
        assert np.allclose(lin.pencil.L1 @ z, 0)
        recovered = recover_eigvec_newton(lin, INFINITY, z, "right")
        assert recovered.block == 1
        assert np.allclose(recovered.vector, [0, 1])


class TestMinimalRecovery:
    @pytest.mark.parametrize("kernel,index", PLANTED)
    def test_planted_right_indices(self, rng, kernel, index):
        k, mu = 3, 1
        P = planted_singular(rng, kernel, k)
        lin = colleague_newton(P, mu)
        pencil_basis = nullspace_minimal_basis(lin.pencil, "right")
        assert list(pencil_basis.degrees) == [index + k - mu - 1]
        basis, indices = recover_minimal_newton(lin, pencil_basis, "right")
        assert indices == [index]
        lam = 0.3 + 0.2j
        assert np.allclose(evaluate(P, lam) @ basis.evaluate(lam), 0, atol=1e-8)
        assert not nullspace_minimal_basis(lin.pencil, "left").vectors

    def test_planted_left_indices(self, rng):
        k, mu = 3, 2
        P = transposed(planted_singular(rng, KERNEL_INDEX_1, k))
        lin = colleague_newton(P, mu)
        pencil_basis = nullspace_minimal_basis(lin.pencil, "left")
        assert list(pencil_basis.degrees) == [1 + mu]
        basis, indices = recover_minimal_newton(lin, pencil_basis, "left")
        assert indices == [1]
        lam = -0.4 + 0.1j
        assert np.allclose(basis.evaluate(lam).T @ evaluate(P, lam), 0, atol=1e-8)
