"""certkit: exact-arithmetic certificates for small algebraic-geometry computations.

Everything in this package computes over exact domains (arbitrary-precision
rationals, small prime fields, one quadratic extension of F2).  There is no
floating point anywhere.
"""

__version__ = "0.1.0"

from .exactcore import (
    Polynomial,
    RationalFunction,
    Fp,
    F4,
    poly_substitute,
    lattice_index,
    kernel_dimension,
    ideal_graded_dimension,
)

__all__ = [
    "Polynomial",
    "RationalFunction",
    "Fp",
    "F4",
    "poly_substitute",
    "lattice_index",
    "kernel_dimension",
    "ideal_graded_dimension",
]
