"""
Block pencil toolkit
Linearize, solve and inspect matrix polynomials in Newton, Lagrange and Chebyshev bases
"""
import sys

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
