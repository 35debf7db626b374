"""
Tests for Lagrange linearizations
"""
import numpy as np
import pytest

from src.errors import ParameterRangeError
from src.lagrange import (
    build_K_D_lagrange,
    colleague_lagrange,
    d_entry_remainders,
    family_lagrange,
    lagrange_splits,
    mu_coordinates,
    one_sided_lagrange,
    recover_eigvec_lagrange,
    recover_minimal_lagrange,
    reference_pencil_lagrange,
    shift_remainders,
    valid_blocks_lagrange,
)
from src.pencils import DualPair, body_product, check_duality, is_minimal_basis
from src.polycore import MatrixPolynomial, evaluate, to_monomial
from src.spectral import (
    nullspace_minimal_basis,
    solve_gep,
    solve_pep,
    verify_linearization,
    verify_strong_linearization,
)
from tests.helpers import KERNEL_INDEX_2, PLANTED, in_basis, planted_singular, random_nodes, random_stack, transposed


def random_lagrange(rng, k, m, n):
    return MatrixPolynomial.lagrange(random_nodes(rng, k + 1), random_stack(rng, k, m, n))


class TestColleague:
    def test_grade_one_demo(self, lagrange_demo):
        pencil = colleague_lagrange(lagrange_demo, 0).pencil
        assert np.allclose(pencil.L0, [[1]])
        assert np.allclose(pencil.L1, [[2]])
        assert solve_gep(pencil.L0, pencil.L1).eigenvalues[0] == pytest.approx(-0.5)

    def test_dual_bases_on_three_nodes(self):
        K1, D1, K2, D2 = build_K_D_lagrange([0, 1, 2], 2, 0, 1, 1)
        assert np.allclose(K1.coeffs[0], [[-2, 0]]) and np.allclose(K1.coeffs[1], [[1, -1]])
        assert np.allclose(D1.coeffs[0], [[0, -2]]) and np.allclose(D1.coeffs[1], [[1, 1]])
        assert K2.rows == 0
        assert np.allclose(D2.coeffs.ravel(), [1])

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_identity_for_every_mu(self, rng, k):
        P = random_lagrange(rng, k, 2, 2)
        target = to_monomial(P).coeffs
        for mu in range(k):
            lin = colleague_lagrange(P, mu)
            product = body_product(lin.pencil.body(), lin.D1, lin.D2).coeffs
            assert np.allclose(product, target, atol=1e-9)

    def test_column_body_when_mu_is_last(self, rng):
        k, m, n = 3, 2, 3
        pencil = colleague_lagrange(random_lagrange(rng, k, m, n), k - 1).pencil
        assert pencil.body_size == (k * m, n)
        assert pencil.row_blocks == (2, 2, 2)
        assert pencil.col_blocks == (3, 2, 2)

    def test_requires_lagrange_input(self, newton_demo):
        with pytest.raises(ParameterRangeError):
            colleague_lagrange(newton_demo, 0)


class TestDualBases:
    @pytest.mark.parametrize("k,mu", [(2, 0), (2, 1), (3, 1), (4, 2), (5, 0)])
    def test_dual_and_minimal(self, rng, k, mu):
        K1, D1, K2, D2 = build_K_D_lagrange(random_nodes(rng, k + 1), k, mu, 2, 1)
        assert check_duality(DualPair(K1, D1, "lagrange", mu, 2))
        assert check_duality(DualPair(K2, D2, "lagrange", mu, 1))
        for basis in (K1, D1, K2, D2):
            if basis.rows:
                assert is_minimal_basis(basis)

    def test_deflation_is_exact(self, rng):
        nodes = random_nodes(rng, 6)
        for mu in range(5):
            assert d_entry_remainders(nodes, 5, mu) < 1e-12

    def test_node_count(self):
        with pytest.raises(ParameterRangeError):
            build_K_D_lagrange([0, 1, 2], 3, 0, 1, 1)


class TestCoordinates:
    def test_three_nodes(self):
        coords = mu_coordinates([0, 1, 2], 2, 1)
        assert np.allclose(coords.a, [0.5, -0.5])
        assert coords.a_coord(1) == pytest.approx(-0.5)

    @pytest.mark.parametrize("mu", [0, 1, 2, 3])
    def test_sum_to_one(self, rng, mu):
        a_defect, b_defect = mu_coordinates(random_nodes(rng, 5), 4, mu).defects()
        assert a_defect < 1e-9
        assert b_defect < 1e-9

    def test_index_range(self):
        with pytest.raises(ParameterRangeError):
            mu_coordinates([0, 1, 2], 2, 1).b_coord(1)


class TestSplits:
    def test_first_sample(self, lagrange_demo):
        T, S = lagrange_splits(lagrange_demo, 1, 0.25)
        assert T[0, 0] == pytest.approx(0.75)
        assert S[0, 0] == pytest.approx(1.5)

    def test_complementary(self, rng):
        P = random_lagrange(rng, 4, 2, 1)
        lam = 0.2 + 0.7j
        for j in range(1, 5):
            T, _ = lagrange_splits(P, j, lam)
            _, S = lagrange_splits(P, j + 1, lam)
            assert np.allclose(T + S, evaluate(P, lam))


class TestFactorizations:
    @pytest.mark.parametrize("mu", [0, 1, 2])
    def test_one_sided(self, rng, mu):
        P = random_lagrange(rng, 3, 2, 2)
        report = verify_linearization(colleague_lagrange(P, mu))
        assert report.passed, report.failed

    def test_weights_are_coordinates(self, rng):
        P = random_lagrange(rng, 3, 1, 1)
        _, _, a, b = one_sided_lagrange(P, 1)
        coords = mu_coordinates(P.nodes, 3, 1)
        assert np.allclose(a, coords.a)
        assert np.allclose(b, coords.b)

    def test_shift_deflation_is_exact(self, rng):
        P = random_lagrange(rng, 4, 2, 2)
        for mu in range(4):
            assert shift_remainders(P, mu) < 1e-10

    def test_family_constants(self, rng):
        k, m, n, mu = 3, 2, 2, 1
        P = random_lagrange(rng, k, m, n)
        A = rng.standard_normal(((mu + 1) * m, (k - mu - 1) * n))
        B = rng.standard_normal((mu * m, (k - mu) * n))
        report = verify_linearization(family_lagrange(P, mu, A, B))
        assert report.passed, report.failed


class TestRecovery:
    def test_valid_blocks_at_node(self):
        P = MatrixPolynomial.lagrange([0, 1, 2], [[[0]], [[1]], [[4]]])
        lin = colleague_lagrange(P, 0)
        assert valid_blocks_lagrange(lin, 0.0, "right") == [2]
        assert valid_blocks_lagrange(lin, 0.0, "left") == [1]
        assert valid_blocks_lagrange(lin, 0.5, "right") == [1, 2]

    def test_eigenvalue_on_node(self):
        # P(x_1) = diag(1, 0) is singular, so lam = x_1 = 0 is an eigenvalue with eigenvector e2
        samples = [np.diag([1.0, 0.0]), np.diag([2.0, 3.0]), np.diag([5.0, -1.0])]
        P = MatrixPolynomial.lagrange([0, 1, 2], samples)
        solution = solve_pep(P, "lagrange", 0)
        at_node = [p for p in solution.pairs if abs(p.value) < 1e-8]
        assert len(at_node) == 1
        pair = at_node[0]
        assert pair.recovered_from == 2
        assert abs(pair.right[0]) < 1e-8 * abs(pair.right[1])
        assert solution.max_residual < 1e-10

    def test_random_pairs(self, rng):
        P = random_lagrange(rng, 3, 3, 3)
        lin = colleague_lagrange(P, 1)
        result = solve_gep(lin.pencil.L0, lin.pencil.L1, want_left=True)
        for j, lam in enumerate(result.eigenvalues):
            x = recover_eigvec_lagrange(lin, lam, result.right[:, j], "right").vector
            y = recover_eigvec_lagrange(lin, lam, result.left[:, j], "left").vector
            Pz = evaluate(P, lam)
            scale = sum(np.linalg.norm(c) * abs(lam) ** i for i, c in enumerate(to_monomial(P).coeffs))
            assert np.linalg.norm(Pz @ x) <= 1e-8 * scale * np.linalg.norm(x)
            assert np.linalg.norm(y @ Pz) <= 1e-8 * scale * np.linalg.norm(y)


class TestMinimalRecovery:
    @pytest.mark.parametrize("kernel,index", PLANTED)
    def test_planted_right_indices(self, rng, kernel, index):
        k, mu = 3, 1
        P = in_basis(planted_singular(rng, kernel, k), "lagrange", rng)
        lin = colleague_lagrange(P, mu)
        pencil_basis = nullspace_minimal_basis(lin.pencil, "right")
        assert list(pencil_basis.degrees) == [index + k - mu - 1]
        basis, indices = recover_minimal_lagrange(lin, pencil_basis, "right")
        assert indices == [index]
        lam = 0.1 - 0.6j
        assert np.allclose(evaluate(P, lam) @ basis.evaluate(lam), 0, atol=1e-8)

    def test_planted_left_indices(self, rng):
        k, mu = 3, 1
        P = in_basis(transposed(planted_singular(rng, KERNEL_INDEX_2, k)), "lagrange", rng)
        lin = colleague_lagrange(P, mu)
        pencil_basis = nullspace_minimal_basis(lin.pencil, "left")
        assert list(pencil_basis.degrees) == [2 + mu]
        basis, indices = recover_minimal_lagrange(lin, pencil_basis, "left")
        assert indices == [2]
        lam = 0.5 + 0.5j
        assert np.allclose(basis.evaluate(lam).T @ evaluate(P, lam), 0, atol=1e-8)


class TestReference:
    def test_grade_one(self, lagrange_demo):
        pencil = reference_pencil_lagrange(lagrange_demo)
        assert np.allclose(pencil.L0, [[1]])
        assert np.allclose(pencil.L1, [[2]])

    def test_spectrum_matches_oracle(self, rng):
        P = random_lagrange(rng, 3, 2, 2)
        report = verify_strong_linearization(reference_pencil_lagrange(P), P)
        assert report["FINITE_SPECTRUM"].passed
        assert report["INFINITE_COUNT"].passed
        assert "D2MD1T_IDENTITY" not in report
