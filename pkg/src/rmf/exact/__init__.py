"""Exact arithmetic tower: Q(i) -> Q(i)(q_s) -> Q(i)(q_s)(z)."""

from .gauss import GR_I, GR_ONE, GR_ZERO, GaussRational
from .qpoly import QP_ONE, QP_ZERO, QPoly, qpoly_gcd
from .scalar import (S_I, S_ONE, S_Q, S_QS, S_ZERO, Scalar, quantum_factorial,
                     quantum_integer)
from .zpoly import (SF_ONE, SF_Z, SF_ZERO, ZP_ONE, ZP_ZERO, SpectralFn, ZPoly,
                    zpoly_gcd)


def normalize(value):
    """Reduce a Scalar or SpectralFn to its canonical representative."""
    return value.normalize()


def evaluate(f, z0):
    """Exact value of a SpectralFn at the Scalar point z0."""
    return f.evaluate(z0)


def poly_gcd(a, b):
    """Monic gcd of two polynomials (QPoly or ZPoly)."""
    if isinstance(a, QPoly):
        return qpoly_gcd(a, b)
    return zpoly_gcd(a, b)
