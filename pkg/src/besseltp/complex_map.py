"""Liouville transformation for the large-order Bessel equation.

Maps the argument z to the turning-point variable zeta, with z = 1 sent to
zeta = 0, zeta real positive on (0, 1) and real negative on (1, oo).  The
companion variable xi = (2/3) zeta^(3/2) and the square root (1 - z^2)^(1/2)
carry branch structure: one circuit of z around the turning point advances
arg(zeta) by 2*pi and flips both xi and the square root.

Branch convention.  The *canonical* branch is the one continued from the
real interval (0, 1): Schwarz-symmetric, continuous on the plane cut along
(-oo, 0], with points of (1, oo) assigned their upper-half-plane limit
(arg zeta = -pi, so (1-z^2)^(1/2) = -i sqrt(z^2-1) and xi is positive
imaginary there).  Points on a path are continued from a previous MapPoint
instead, which is how contour tables keep a single consistent sheet all the
way around a loop enclosing z = 1.

Near z = 1 the defining formulas lose digits to cancellation, so zeta,
zeta' and xi switch to Maclaurin series in delta = (1 - z^2)^(1/2) below
|delta| = 0.2; the series tables are exact rationals evaluated by Horner.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _rational as rat
from ._backend import DOUBLE
from .errors import MapDomainError

__all__ = [
    "Region",
    "MapPoint",
    "map_zeta",
    "map_xi",
    "map_zeta_prime",
    "classify_region",
    "map_point",
    "continue_path",
    "DELTA_SERIES_RADIUS",
]

DELTA_SERIES_RADIUS = 0.2
_SERIES_ORDER = 14  # powers of delta^2; truncation < 1e-20 at the switch radius

CBRT2 = 2.0 ** (1.0 / 3.0)


class Region(enum.Enum):
    """Location of z relative to the eye-shaped curve bounding Re xi > 0."""

    INSIDE_EYE = "inside-eye"
    OUTSIDE_EYE_RE_GT_1 = "outside-eye-re-gt-1"
    OUTSIDE_EYE_OTHER = "outside-eye-other"


def _build_series():
    # xi = (delta^3/3) * s(delta^2),  s(w) = sum 3 w^k / (2k+3)
    s = tuple(Fraction(3, 2 * k + 3) for k in range(_SERIES_ORDER + 1))
    f = rat.series_nth_root(s, 3, _SERIES_ORDER)  # f = s^(1/3); zeta' = -2^(1/3)/(z f)
    f2 = rat.series_mul(f, f, _SERIES_ORDER)      # zeta = 2^(-2/3) delta^2 f^2
    return s, f, f2


_S_SERIES, _F_SERIES, _F2_SERIES = _build_series()


def _check_domain(z) -> None:
    if z == 0:
        raise MapDomainError("z = 0 is outside the map domain")
    if z.imag == 0 and z.real < 0:
        raise MapDomainError(f"z = {z} lies on the cut (-oo, 0]")


def _canonical_delta(z, bk):
    """(1-z^2)^(1/2), continuous from (0,1); -i sqrt(z^2-1) on (1,oo)."""
    if z.imag == 0 and z.real > 1:
        return -1j * bk.sqrt((z - 1) * (z + 1))
    return bk.sqrt(1 - z) * bk.sqrt(1 + z)


def _xi_from_delta(z, delta, bk):
    return bk.log((1 + delta) / z) - delta


def _use_series(z, delta, bk) -> bool:
    return z.real > 0 and bk.abs(delta) < DELTA_SERIES_RADIUS


def _zeta_log_form(z, bk=DOUBLE):
    """Log form valid for Re z <= 1 (principal 2/3 power of the exponent)."""
    xi = _xi_from_delta(z, _canonical_delta(z, bk), bk)
    return bk.exp(bk.log(1.5 * xi) * 2 / 3)


def _zeta_arctan_form(z, bk=DOUBLE):
    """Companion form for Re z > 1, written with logarithms."""
    w = bk.sqrt(z * z - 1)
    br = 1j * bk.log((1 + 1j * w) / z) + w
    return -bk.exp(bk.log(1.5 * br) * 2 / 3)


def map_zeta(z, bk=DOUBLE):
    """Turning-point variable zeta(z); real on (0, oo), analytic off (-oo, 0]."""
    z = bk.to_native(z)
    _check_domain(z)
    delta = _canonical_delta(z, bk)
    if _use_series(z, delta, bk):
        w = delta * delta
        return (w * rat.horner(_F2_SERIES, w, bk.coeff)) * bk.real_pow(2, bk.frac(-2, 3))
    if z.real <= 1:
        return _zeta_log_form(z, bk)
    return _zeta_arctan_form(z, bk)


def map_xi(z, extend: bool = False, bk=DOUBLE):
    """xi = (2/3) zeta^(3/2) on the canonical branch.

    The working sector is |arg z| <= pi/2; outside it the canonical
    continuation across the imaginary axis is well defined but only handed
    out with extend=True.
    """
    z = bk.to_native(z)
    _check_domain(z)
    if not extend and abs(bk.phase(z)) > math.pi / 2 + 1e-15:
        raise MapDomainError(
            f"z = {z} outside |arg z| <= pi/2; pass extend=True for the "
            "canonical continuation"
        )
    delta = _canonical_delta(z, bk)
    if _use_series(z, delta, bk):
        w = delta * delta
        return (delta * w / 3) * rat.horner(_S_SERIES, w, bk.coeff)
    return _xi_from_delta(z, delta, bk)


def map_zeta_prime(z, bk=DOUBLE):
    """d zeta / dz, stabilized near the turning point by the delta series."""
    z = bk.to_native(z)
    _check_domain(z)
    delta = _canonical_delta(z, bk)
    if _use_series(z, delta, bk):
        f = rat.horner(_F_SERIES, delta * delta, bk.coeff)
        return -bk.real_pow(2, bk.frac(1, 3)) / (z * f)
    xi = _xi_from_delta(z, delta, bk)
    sqrt_zeta = bk.exp(bk.log(1.5 * xi) / 3)
    return -delta / (z * sqrt_zeta)


def classify_region(z, bk=DOUBLE) -> Region:
    """Select the stability region used by the direct coefficient formulas."""
    z = bk.to_native(z)
    xi = map_xi(z, extend=True, bk=bk)
    if xi.real > 0:
        return Region.INSIDE_EYE
    if z.real > 1:
        return Region.OUTSIDE_EYE_RE_GT_1
    return Region.OUTSIDE_EYE_OTHER


@dataclass(frozen=True)
class MapPoint:
    """One argument z with its mapped values on a tracked branch.

    arg_xi and arg_sqrt are the continuously tracked arguments of xi and of
    sqrt_one_minus_z2; quarter powers derive from them, never from principal
    branches, so a point continued around the turning point keeps a
    consistent sheet.
    """

    z: complex
    zeta: complex
    xi: complex
    zeta_prime: complex
    sqrt_one_minus_z2: complex
    arg_xi: float
    arg_sqrt: float
    region: Region
    quarter_zeta: complex
    quarter_one_minus_z2: complex

    @property
    def sqrt_zeta(self) -> complex:
        return self.quarter_zeta * self.quarter_zeta

    def inv_xi_pow(self, s: int) -> complex:
        return self.xi ** (-s)


def _angle_close(a: float, b: float) -> bool:
    """True when a == b modulo 2*pi, within a quarter turn."""
    return math.cos(a - b) > 0.5


def _match_sign(value, target_arg: float, bk):
    return value if _angle_close(bk.phase(value), target_arg) else -value


def _match_quarter(principal, target_arg: float, bk):
    # rotate the principal quarter power by i^k onto the tracked sheet
    best, best_err = principal, None
    for k in range(4):
        cand = principal * (1j ** k)
        err = abs(math.remainder(bk.phase(cand) - target_arg, 2 * math.pi))
        if best_err is None or err < best_err:
            best, best_err = cand, err
    return best


def map_point(z, prev: MapPoint | None = None, extend: bool = False, bk=DOUBLE) -> MapPoint:
    """Construct a MapPoint on the canonical branch, or continued from prev.

    Continuation assumes the step from prev.z to z is small enough that
    arg(zeta) and arg(1-z^2) each move by less than pi.
    """
    z = bk.to_native(z)
    _check_domain(z)
    if prev is None and not extend and abs(bk.phase(z)) > math.pi / 2 + 1e-15:
        raise MapDomainError(
            f"z = {z} outside |arg z| <= pi/2 and no continuation point given"
        )

    zeta = map_zeta(z, bk=bk)
    delta_can = _canonical_delta(z, bk)
    xi_can = map_xi(z, extend=True, bk=bk)

    if prev is None:
        if z.imag == 0 and z.real > 1:
            arg_zeta = -math.pi
        else:
            arg_zeta = float(bk.phase(zeta))
        arg_xi = 1.5 * arg_zeta
        arg_sqrt = float(bk.phase(delta_can))
        xi = xi_can
        delta = delta_can
    else:
        arg_zeta = (2.0 / 3.0) * prev.arg_xi + float(bk.phase(zeta / prev.zeta))
        arg_xi = 1.5 * arg_zeta
        d_omz2 = float(bk.phase(((1 - z * z) / (1 - prev.z * prev.z))))
        arg_sqrt = prev.arg_sqrt + 0.5 * d_omz2
        xi = _match_sign(xi_can, arg_xi, bk)
        delta = _match_sign(delta_can, arg_sqrt, bk)

    if _use_series(z, delta_can, bk):
        f = rat.horner(_F_SERIES, delta_can * delta_can, bk.coeff)
        zeta_prime = -bk.real_pow(2, bk.frac(1, 3)) / (z * f)
    else:
        # zeta' = -delta/(z sqrt(zeta)) needs delta and sqrt(zeta) on the
        # same sheet; both are matched to the tracked arguments.
        sqrt_zeta = _match_sign(bk.sqrt(zeta), arg_xi / 3, bk)
        zeta_prime = -delta / (z * sqrt_zeta)

    q_zeta = _match_quarter(bk.sqrt(bk.sqrt(zeta)), arg_xi / 6, bk)
    q_omz2 = _match_quarter(bk.sqrt(delta), arg_sqrt / 2, bk)

    if xi_can.real > 0:
        region = Region.INSIDE_EYE
    elif z.real > 1:
        region = Region.OUTSIDE_EYE_RE_GT_1
    else:
        region = Region.OUTSIDE_EYE_OTHER

    return MapPoint(
        z=z,
        zeta=zeta,
        xi=xi,
        zeta_prime=zeta_prime,
        sqrt_one_minus_z2=delta,
        arg_xi=arg_xi,
        arg_sqrt=arg_sqrt,
        region=region,
        quarter_zeta=q_zeta,
        quarter_one_minus_z2=q_omz2,
    )


def continue_path(zs, start: MapPoint | None = None, bk=DOUBLE) -> list[MapPoint]:
    """Map every point of a path, tracking branches from point to point."""
    out: list[MapPoint] = []
    prev = start
    for z in zs:
        prev = map_point(z, prev=prev, extend=True, bk=bk)
        out.append(prev)
    return out
