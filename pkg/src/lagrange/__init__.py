"""
Lagrange linearizations package
"""
from .coordinates import MuCoordinates, lagrange_splits, mu_coordinates
from .linearization import (
    LagrangeLinearization,
    build_K_D_lagrange,
    colleague_lagrange,
    d_entry_remainders,
    family_lagrange,
)
from .factorizations import one_sided_lagrange, shift_remainders
from .recovery import recover_eigvec_lagrange, recover_minimal_lagrange, valid_blocks_lagrange
from .reference import reference_pencil_lagrange

__all__ = [
    'MuCoordinates', 'lagrange_splits', 'mu_coordinates',
    'LagrangeLinearization', 'build_K_D_lagrange', 'colleague_lagrange', 'd_entry_remainders', 'family_lagrange',
    'one_sided_lagrange', 'shift_remainders',
    'recover_eigvec_lagrange', 'recover_minimal_lagrange', 'valid_blocks_lagrange',
    'reference_pencil_lagrange',
]
