"""
End-to-end pipeline: build a linearization, solve it, recover, verify
"""
import logging
from typing import Optional, Tuple, Union

import numpy as np

from src.chebyshev import (
    ChebLinearization,
    build_K_D_cheb,
    family_cheb,
    one_sided_cheb,
    recover_eigvec_cheb,
    recover_minimal_cheb,
)
from src.config import Tolerances, get_tolerances
from src.errors import DimensionMismatchError, ParameterRangeError, SingularPolynomialError
from src.lagrange import (
    LagrangeLinearization,
    build_K_D_lagrange,
    family_lagrange,
    one_sided_lagrange,
    recover_eigvec_lagrange,
    recover_minimal_lagrange,
)
from src.newton import (
    NewtonLinearization,
    build_K_D_newton,
    family_newton,
    newton_points,
    one_sided_newton,
    recover_eigvec_newton,
    recover_minimal_newton,
)
from src.pencils.block_pencil import BlockPencil
from src.pencils.minimal_bases import DualPair, body_product, duality_defect, sample_points
from src.pencils.recovery import RecoveredVector
from src.polycore import arithmetic
from src.polycore.basis import BasisKind
from src.polycore.matrix_polynomial import MatrixPolynomial, evaluate, to_monomial
from src.polycore.vector_basis import PolyVectorBasis
from src.spectral.diagnostics import backward_error, match_spectra, monomial_oracle_spectrum, reversal_infinite_count
from src.spectral.gep import solve_gep
from src.spectral.nullspace import normal_rank
from src.spectral.types import CheckResult, EigenPair, EigenSolution, VerificationReport

logger = logging.getLogger(__name__)

Linearization = Union[NewtonLinearization, LagrangeLinearization, ChebLinearization]

BASIS_FAMILIES = ("newton", "lagrange", "chebyshev")


def infer_family(P: MatrixPolynomial) -> str:
    """Linearization family matching the basis of P (monomial goes through Newton)"""
    if P.kind in (BasisKind.MONOMIAL, BasisKind.NEWTON):
        return "newton"
    if P.kind is BasisKind.LAGRANGE:
        return "lagrange"
    return "chebyshev"


def build_linearization(P: MatrixPolynomial, family: Optional[str] = None, param: int = 0,
                        A: Optional[np.ndarray] = None, B: Optional[np.ndarray] = None) -> Linearization:
    """
    Build the block minimal basis linearization of P for a family

    Args:
        P: Matrix polynomial
        family: "newton", "lagrange" or "chebyshev"; inferred from P when None
        param: mu (Newton, Lagrange) or eps (Chebyshev)
        A: Optional left constant of the family
        B: Optional right constant of the family

    Returns:
        NewtonLinearization, LagrangeLinearization or ChebLinearization
    """
    family = family or infer_family(P)
    if family not in BASIS_FAMILIES:
        raise ParameterRangeError(f"Unknown family '{family}'. Use one of {', '.join(BASIS_FAMILIES)}")
    if family != infer_family(P):
        raise ParameterRangeError(f"A {P.kind.value} polynomial cannot use the {family} family")
    builder = {"newton": family_newton, "lagrange": family_lagrange, "chebyshev": family_cheb}[family]
    return builder(P, param, A, B)


def recover_eigvec(lin: Linearization, lam0: complex, vector: np.ndarray, side: str = "right",
                   tol: Tolerances = None) -> RecoveredVector:
    """Dispatch to the recovery rule of the linearization's family"""
    if isinstance(lin, NewtonLinearization):
        return recover_eigvec_newton(lin, lam0, vector, side, tol)
    if isinstance(lin, LagrangeLinearization):
        return recover_eigvec_lagrange(lin, lam0, vector, side, tol)
    return recover_eigvec_cheb(lin, lam0, vector, side, tol)


def recover_minimal(lin: Linearization, basis: PolyVectorBasis, side: str = "right",
                    tol: Tolerances = None) -> Tuple[PolyVectorBasis, list]:
    """Dispatch to the minimal basis recovery of the linearization's family"""
    if isinstance(lin, NewtonLinearization):
        return recover_minimal_newton(lin, basis, side, tol)
    if isinstance(lin, LagrangeLinearization):
        return recover_minimal_lagrange(lin, basis, side, tol)
    return recover_minimal_cheb(lin, basis, side, tol)


def degree_shifts(lin: Linearization) -> Tuple[int, int]:
    """(deg D1, deg D2): pencil minimal indices exceed those of P by these amounts"""
    k = lin.grade
    if isinstance(lin, ChebLinearization):
        return lin.eps, k - 1 - lin.eps
    return k - lin.mu - 1, lin.mu


def one_sided_factors(lin: Linearization) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    H, G and block weights with L H = right_weights (x) P and G L = left_weights^T (x) P

    For A, B != 0 the colleague factors are carried through the strict
    equivalence [I A; 0 I] C [I 0; B I].

    Args:
        lin: Linearization

    Returns:
        (H stack, G stack, weights over the row blocks, weights over the column blocks)
    """
    P = lin.source
    pencil = lin.pencil
    rows, cols = len(pencil.row_blocks), len(pencil.col_blocks)
    right_w = np.zeros(rows, dtype=complex)
    left_w = np.zeros(cols, dtype=complex)
    if isinstance(lin, NewtonLinearization):
        H, G, r, c = one_sided_newton(P, lin.mu)
        right_w[r - 1] = 1.0
        left_w[c - 1] = 1.0
    elif isinstance(lin, LagrangeLinearization):
        H, G, a, b = one_sided_lagrange(P, lin.mu)
        right_w[: len(a)] = a
        left_w[: len(b)] = b
    else:
        H, G, r, c = one_sided_cheb(P, lin.eps)
        right_w[r - 1] = 1.0
        left_w[c - 1] = 1.0

    H, G = H.coeffs, G.coeffs
    body_r, body_c = pencil.body_size
    if lin.B.size:
        H = H.copy()
        H[:, body_c:, :] -= np.einsum("ij,djk->dik", lin.B, H[:, :body_c, :])
    if lin.A.size:
        G = G.copy()
        G[:, :, body_r:] -= np.einsum("dij,jk->dik", G[:, :, :body_r], lin.A)
    return H, G, right_w, left_w


def factorization_defects(lin: Linearization) -> Tuple[float, float]:
    """
    Relative defects of L H = w (x) P and G L = v^T (x) P at sample points

    Args:
        lin: Linearization

    Returns:
        (right defect, left defect)
    """
    H, G, right_w, left_w = one_sided_factors(lin)
    pencil = lin.pencil
    P = lin.source
    count = max(H.shape[0], G.shape[0]) + 1
    radius = lin.dual_pairs()[0].radius
    right = left = 0.0
    for z in sample_points(count, radius):
        Lz, Pz = pencil.evaluate(z), evaluate(P, z)
        Hz, Gz = arithmetic.evaluate(H, z), arithmetic.evaluate(G, z)
        scale = 1.0 + np.linalg.norm(Pz)
        expected_right = _weighted_blocks(right_w, pencil.row_blocks, Pz, axis=0)
        expected_left = _weighted_blocks(left_w, pencil.col_blocks, Pz, axis=1)
        right = max(right, np.linalg.norm(Lz @ Hz - expected_right) / (scale + np.linalg.norm(Lz) * np.linalg.norm(Hz)))
        left = max(left, np.linalg.norm(Gz @ Lz - expected_left) / (scale + np.linalg.norm(Lz) * np.linalg.norm(Gz)))
    return float(right), float(left)


def _weighted_blocks(weights: np.ndarray, sizes, Pz: np.ndarray, axis: int) -> np.ndarray:
    """Stack w_i * P along axis, zero blocks where the weight is zero"""
    m, n = Pz.shape
    parts = []
    for w, size in zip(weights, sizes):
        shape = (size, n) if axis == 0 else (m, size)
        parts.append(w * Pz if w != 0 else np.zeros(shape, dtype=complex))
    return np.concatenate(parts, axis=axis)


def pencil_dual_bases(pencil: BlockPencil, P: MatrixPolynomial
                      ) -> Optional[Tuple[MatrixPolynomial, MatrixPolynomial, MatrixPolynomial, MatrixPolynomial]]:
    """
    Rebuild (K1, D1, K2, D2) from the pencil's family tag and parameter

    Args:
        pencil: Block pencil with family metadata
        P: Polynomial the pencil claims to linearize

    Returns:
        The four bases, or None for generic pencils
    """
    k, m, n = P.grade, P.rows, P.cols
    if pencil.family == "newton":
        return build_K_D_newton(newton_points(P), k, pencil.param, n, m)
    if pencil.family == "lagrange":
        return build_K_D_lagrange(P.nodes, k, pencil.param, n, m)
    if pencil.family in ("cheb1", "cheb2"):
        return build_K_D_cheb(k, pencil.param, (int(pencil.family[-1]), 2), n, m)
    return None


def _is_regular(P: MatrixPolynomial, tol: Tolerances, seed: Optional[int]) -> bool:
    return P.is_square and normal_rank(P, tol, seed) == P.cols


def solve_pep(P: MatrixPolynomial, family: Optional[str] = None, param: int = 0, A: Optional[np.ndarray] = None,
              B: Optional[np.ndarray] = None, want_left: bool = False, tol: Tolerances = None,
              seed: Optional[int] = None) -> EigenSolution:
    """
    Solve P(lam) x = 0 through a block minimal basis linearization

    Args:
        P: Regular square matrix polynomial
        family: Linearization family (inferred from the basis when None)
        param: mu or eps
        A: Optional family constant
        B: Optional family constant
        want_left: Also recover left eigenvectors
        tol: Tolerance record
        seed: Seed of the normal rank probes

    Returns:
        EigenSolution with residuals recomputed against P
    """
    tol = get_tolerances(tol)
    if not _is_regular(P, tol, seed):
        raise SingularPolynomialError(
            f"The {P.rows}x{P.cols} polynomial looks singular; use nullspace_minimal_basis for its minimal bases")

    lin = build_linearization(P, family, param, A, B)
    result = solve_gep(lin.pencil.L0, lin.pencil.L1, want_left=want_left, tol=tol)
    if np.any(result.indeterminate):
        raise SingularPolynomialError(
            "Indeterminate eigenvalues (alpha ~ beta ~ 0); use nullspace_minimal_basis for its minimal bases")

    pairs = []
    for j, lam in enumerate(result.eigenvalues):
        right = recover_eigvec(lin, lam, result.right[:, j], "right", tol)
        left = None
        residual_left = None
        if want_left:
            left = recover_eigvec(lin, lam, result.left[:, j], "left", tol)
            residual_left = backward_error(P, lam, left.vector, "left")
        pairs.append(EigenPair(
            value=complex(lam), right=right.vector, left=None if left is None else left.vector,
            residual_right=backward_error(P, lam, right.vector, "right"), residual_left=residual_left,
            recovered_from=right.block,
        ))

    solution = EigenSolution(tuple(pairs), lin.pencil.family, lin.pencil.param).sorted()
    logger.info(f"Solved {lin.pencil.family} linearization (param {lin.pencil.param}): "
                f"{len(solution)} eigenpairs, max residual {solution.max_residual:.2e}")
    return solution


def _spectrum_checks(pencil: BlockPencil, P: MatrixPolynomial, tol: Tolerances) -> Tuple[CheckResult, CheckResult]:
    if not P.is_square or not pencil.is_square:
        detail = "spectral checks need a square polynomial and pencil"
        return (CheckResult("FINITE_SPECTRUM", False, float("inf"), detail),
                CheckResult("INFINITE_COUNT", False, float("inf"), detail))

    pencil_eigs = solve_gep(pencil.L0, pencil.L1, tol=tol).eigenvalues
    oracle = monomial_oracle_spectrum(P, tol)
    pencil_finite = pencil_eigs[~np.isinf(pencil_eigs)]
    oracle_finite = oracle[~np.isinf(oracle)]
    ok, worst = match_spectra(pencil_finite, oracle_finite, tol)
    finite = CheckResult("FINITE_SPECTRUM", ok, worst,
                         f"{pencil_finite.size} finite eigenvalues vs {oracle_finite.size} from the companion oracle")

    expected = reversal_infinite_count(P, tol)
    got = int(np.sum(np.isinf(pencil_eigs)))
    infinite = CheckResult("INFINITE_COUNT", got == expected, float(abs(got - expected)),
                           f"pencil has {got} infinite eigenvalues, reversal has {expected} zero eigenvalues")
    return finite, infinite


def _identity_check(pencil: BlockPencil, P: MatrixPolynomial, D1, D2, tol: Tolerances) -> CheckResult:
    body = pencil.body()
    try:
        product = body_product(body, D1, D2).coeffs
    except DimensionMismatchError as e:
        return CheckResult("D2MD1T_IDENTITY", False, float("inf"), str(e))
    target = to_monomial(P).coeffs
    length = max(product.shape[0], target.shape[0])
    diff = arithmetic.pad_stack(product, length) - arithmetic.pad_stack(target, length)
    scale = max(1.0, max(np.linalg.norm(c) for c in target))
    defect = float(max(np.linalg.norm(c) for c in diff) / scale)
    return CheckResult("D2MD1T_IDENTITY", defect <= tol.identity_rtol, defect, "relative coefficient error")


def verify_strong_linearization(L: Union[BlockPencil, Linearization], P: MatrixPolynomial,
                                dual_bases: Optional[Tuple[MatrixPolynomial, MatrixPolynomial]] = None,
                                tol: Tolerances = None) -> VerificationReport:
    """
    Spectral evidence that L is a strong linearization of P

    A grade above the degree is counted as n*(grade - degree) infinite
    eigenvalues only when the trailing coefficients are exactly zero. Samples
    of a lower-degree polynomial in the Lagrange basis leave leading monomial
    coefficients at roundoff level instead; infinite Jordan chains of length
    two or more then split into finite eigenvalues near 1/sqrt(eps), so
    INFINITE_COUNT undercounts and FINITE_SPECTRUM can miss eig_match_tol.
    Interpolate at the true degree in that case.

    Args:
        L: Pencil (or linearization object)
        P: Matrix polynomial
        dual_bases: Optional (D1, D2); rebuilt from the family tag when omitted
        tol: Tolerance record

    Returns:
        VerificationReport with FINITE_SPECTRUM, INFINITE_COUNT and, for block
        families, D2MD1T_IDENTITY
    """
    tol = get_tolerances(tol)
    pencil = L if isinstance(L, BlockPencil) else L.pencil
    checks = list(_spectrum_checks(pencil, P, tol))

    if dual_bases is None and pencil.family != "generic":
        try:
            bases = pencil_dual_bases(pencil, P)
        except (ParameterRangeError, DimensionMismatchError) as e:
            checks.append(CheckResult("D2MD1T_IDENTITY", False, float("inf"), str(e)))
            bases = None
        if bases is not None:
            dual_bases = (bases[1], bases[3])
    if dual_bases is not None:
        checks.append(_identity_check(pencil, P, dual_bases[0], dual_bases[1], tol))

    report = VerificationReport(tuple(checks))
    logger.info(f"Strong linearization checks: {'pass' if report.passed else 'fail ' + str(report.failed)}")
    return report


def verify_pencil(pencil: BlockPencil, P: MatrixPolynomial, tol: Tolerances = None) -> VerificationReport:
    """
    Full check list for a pencil read from a file: duality of its own K blocks,
    the colleague identity and the spectral checks

    Args:
        pencil: Block pencil with family metadata
        P: Polynomial it claims to linearize
        tol: Tolerance record

    Returns:
        VerificationReport
    """
    tol = get_tolerances(tol)
    checks = []
    bases = None
    if pencil.family != "generic":
        try:
            bases = pencil_dual_bases(pencil, P)
        except (ParameterRangeError, DimensionMismatchError) as e:
            checks.append(CheckResult("DUALITY_K1", False, float("inf"), str(e)))
    if bases is not None:
        _, D1, _, D2 = bases
        K1 = MatrixPolynomial.monomial(pencil.k1_block())
        K2 = MatrixPolynomial.monomial(arithmetic.transpose(pencil.k2t_block()))
        checks.extend(_duality_checks(DualPair(K1, D1, pencil.family, pencil.param, P.cols),
                                      DualPair(K2, D2, pencil.family, pencil.param, P.rows), tol))
    spectral = verify_strong_linearization(pencil, P, None if bases is None else (bases[1], bases[3]), tol)
    return VerificationReport(tuple(checks)).merged(spectral)


def _duality_checks(first: DualPair, second: DualPair, tol: Tolerances) -> Tuple[CheckResult, CheckResult]:
    out = []
    for name, pair in (("DUALITY_K1", first), ("DUALITY_K2", second)):
        try:
            defect = duality_defect(pair)
        except DimensionMismatchError as e:
            out.append(CheckResult(name, False, float("inf"), str(e)))
            continue
        out.append(CheckResult(name, defect <= tol.duality_tol, defect, "max |K D^T| / (1 + |K||D|)"))
    return tuple(out)


def verify_linearization(lin: Linearization, tol: Tolerances = None) -> VerificationReport:
    """
    Every check available when the pencil is built from P: duality, colleague
    identity, both one-sided factorizations and the spectral checks

    Args:
        lin: Linearization built by this library
        tol: Tolerance record

    Returns:
        VerificationReport
    """
    tol = get_tolerances(tol)
    checks = list(_duality_checks(*lin.dual_pairs(), tol))
    right, left = factorization_defects(lin)
    checks.append(CheckResult("RIGHT_FACTORIZATION", right <= tol.identity_rtol, right, "L H = w (x) P"))
    checks.append(CheckResult("LEFT_FACTORIZATION", left <= tol.identity_rtol, left, "G L = v^T (x) P"))
    spectral = verify_strong_linearization(lin.pencil, lin.source, (lin.D1, lin.D2), tol)
    return VerificationReport(tuple(checks)).merged(spectral)
