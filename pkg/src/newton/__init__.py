"""
Newton linearizations package
"""
from .linearization import (
    NewtonLinearization,
    build_K_D_newton,
    colleague_newton,
    family_newton,
    newton_points,
)
from .factorizations import newton_horner, newton_horner_direct, newton_horner_polynomial, one_sided_newton
from .recovery import recover_eigvec_newton, recover_minimal_newton

__all__ = [
    'NewtonLinearization', 'build_K_D_newton', 'colleague_newton', 'family_newton', 'newton_points',
    'newton_horner', 'newton_horner_direct', 'newton_horner_polynomial', 'one_sided_newton',
    'recover_eigvec_newton', 'recover_minimal_newton',
]
