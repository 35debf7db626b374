"""
Chebyshev linearizations package
"""
from .linearization import (
    ChebLinearization,
    build_K_D_cheb,
    colleague_body,
    colleague_cheb,
    family_cheb,
)
from .factorizations import cheb_horner, cheb_horner_direct, cheb_horner_polynomial, one_sided_cheb, phi_monomial
from .recovery import recover_eigvec_cheb, recover_minimal_cheb, valid_blocks_cheb

__all__ = [
    'ChebLinearization', 'build_K_D_cheb', 'colleague_body', 'colleague_cheb', 'family_cheb',
    'cheb_horner', 'cheb_horner_direct', 'cheb_horner_polynomial', 'one_sided_cheb', 'phi_monomial',
    'recover_eigvec_cheb', 'recover_minimal_cheb', 'valid_blocks_cheb',
]
