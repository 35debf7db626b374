"""
Spectral package
"""
from .types import CheckResult, EigenPair, EigenSolution, GEPResult, VerificationReport
from .gep import solve_gep
from .diagnostics import (
    backward_error,
    chordal_distance,
    match_spectra,
    monomial_oracle_spectrum,
    reversal_infinite_count,
)
from .nullspace import convolution_matrix, normal_rank, nullspace_minimal_basis
from .pipeline import (
    BASIS_FAMILIES,
    build_linearization,
    degree_shifts,
    factorization_defects,
    infer_family,
    one_sided_factors,
    pencil_dual_bases,
    recover_eigvec,
    recover_minimal,
    solve_pep,
    verify_linearization,
    verify_pencil,
    verify_strong_linearization,
)

__all__ = [
    'CheckResult', 'EigenPair', 'EigenSolution', 'GEPResult', 'VerificationReport',
    'solve_gep',
    'backward_error', 'chordal_distance', 'match_spectra', 'monomial_oracle_spectrum', 'reversal_infinite_count',
    'convolution_matrix', 'normal_rank', 'nullspace_minimal_basis',
    'BASIS_FAMILIES', 'build_linearization', 'degree_shifts', 'factorization_defects', 'infer_family',
    'one_sided_factors', 'pencil_dual_bases', 'recover_eigvec', 'recover_minimal', 'solve_pep',
    'verify_linearization', 'verify_pencil', 'verify_strong_linearization',
]
