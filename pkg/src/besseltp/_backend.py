"""Arithmetic backends: double precision (cmath) and arbitrary precision (mpmath).

The mapping and expansion formulas are written once against this tiny shim so
the contour pipeline can run either in hardware doubles or, for convergence
studies beyond the double floor, in mpmath working precision.  Both backends
use principal branches with the cut on the negative real axis and
arg in (-pi, pi].
"""

from __future__ import annotations

import cmath
import math

import mpmath


class DoubleBackend:
    name = "double"
    pi = math.pi

    sqrt = staticmethod(cmath.sqrt)
    log = staticmethod(cmath.log)
    exp = staticmethod(cmath.exp)
    cosh = staticmethod(cmath.cosh)
    sinh = staticmethod(cmath.sinh)
    phase = staticmethod(cmath.phase)

    @staticmethod
    def to_native(x):
        return complex(x)

    @staticmethod
    def abs(x) -> float:
        return abs(x)

    @staticmethod
    def real_pow(x, a):
        # x > 0 real, a real
        return x ** a

    @staticmethod
    def frac(num: int, den: int) -> float:
        return num / den

    @staticmethod
    def coeff(fr):
        return float(fr)


class MPBackend:
    """mpmath-backed twin; precision follows the active mpmath context."""

    name = "mp"

    def __init__(self):
        self.pi = mpmath.pi

    sqrt = staticmethod(mpmath.sqrt)
    log = staticmethod(mpmath.log)
    exp = staticmethod(mpmath.exp)
    cosh = staticmethod(mpmath.cosh)
    sinh = staticmethod(mpmath.sinh)

    @staticmethod
    def phase(x):
        return mpmath.arg(x)

    @staticmethod
    def to_native(x):
        return mpmath.mpc(x)

    @staticmethod
    def abs(x):
        return abs(mpmath.mpc(x))

    @staticmethod
    def real_pow(x, a):
        return mpmath.power(x, a)

    @staticmethod
    def frac(num: int, den: int):
        return mpmath.mpf(num) / den

    @staticmethod
    def coeff(fr):
        return mpmath.mpf(fr.numerator) / fr.denominator


DOUBLE = DoubleBackend()


def mp_backend() -> MPBackend:
    return MPBackend()
