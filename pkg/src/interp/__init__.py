"""
Interpolation package
"""
from .nodes import chebyshev_nodes
from .functions import SampledFunction, demo_function, polynomial_function, sample_deviation
from .fitting import chebyshev_coefficients, divided_differences, lagrange_sample

__all__ = [
    'chebyshev_nodes',
    'SampledFunction', 'demo_function', 'polynomial_function', 'sample_deviation',
    'chebyshev_coefficients', 'divided_differences', 'lagrange_sample',
]
