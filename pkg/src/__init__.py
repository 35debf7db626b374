"""
Block minimal basis linearizations of matrix polynomials
"""
__version__ = "1.0.0"
