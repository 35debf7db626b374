"""
Polynomial core package
"""
from .basis import (
    BasisDescriptor,
    BasisKind,
    NodeSet,
    basis_element_monomial,
    chebyshev_identity_defects,
    chebyshev_value,
    chebyshev_values,
)
from .matrix_polynomial import (
    INFINITY,
    MatrixPolynomial,
    basis_values,
    evaluate,
    gamma,
    is_infinite,
    newton_aux,
    reverse,
    to_monomial,
)
from .vector_basis import PolyVectorBasis
from .serialization import load_polynomial, polynomial_from_dict, polynomial_to_dict

__all__ = [
    'BasisDescriptor', 'BasisKind', 'NodeSet', 'MatrixPolynomial', 'PolyVectorBasis', 'INFINITY',
    'evaluate', 'reverse', 'to_monomial', 'newton_aux', 'gamma', 'basis_values', 'is_infinite',
    'basis_element_monomial', 'chebyshev_values', 'chebyshev_value', 'chebyshev_identity_defects',
    'load_polynomial', 'polynomial_from_dict', 'polynomial_to_dict',
]
