"""Airy functions of complex argument and their exponential-form expansions.

Evaluation strategy: Maclaurin series for |w| <= 9 (run in scratch extended
precision because the series cancels about 0.29*|w|^(3/2) digits), and the
exponential-form asymptotic expansion beyond, rotated through the connection
formula

    Ai(w) + e^(2 pi i/3) Ai(w e^(2 pi i/3)) + e^(-2 pi i/3) Ai(w e^(-2 pi i/3)) = 0

when arg w approaches pi.  The asymptotic form keeps its expansion inside an
exponential,

    Ai(u^(2/3) zeta) ~ exp(-u xi + sum_s (-1)^s a_s/(s u^s xi^s))
                       / (2 sqrt(pi) u^(1/6) zeta^(1/4)),

with xi = (2/3) zeta^(3/2); the derivative uses companion coefficients
a~_s and the prefactor -u^(1/6) zeta^(1/4)/(2 sqrt(pi)).  Both coefficient
families satisfy the same quadratic recursion from their two equal seeds.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from ._backend import DOUBLE
from .errors import AiryRangeError

__all__ = [
    "AiryPair",
    "ExpCoeffs",
    "exp_coeffs",
    "airy_eval",
    "airy_rotated",
    "lg_airy",
    "MACLAURIN_RADIUS",
    "ASYMPT_S_MAX",
]

MACLAURIN_RADIUS = 9.0
ASYMPT_S_MAX = 20

# exact rotation factors e^(-2 pi i j / 3)
_ROT = {
    0: 1 + 0j,
    1: complex(-0.5, -math.sqrt(3.0) / 2),
    -1: complex(-0.5, math.sqrt(3.0) / 2),
}

_EXP_OVERFLOW = 709.0  # log of largest double


@dataclass(frozen=True)
class AiryPair:
    value: complex
    derivative: complex

    def __iter__(self):
        return iter((self.value, self.derivative))


@dataclass(frozen=True)
class ExpCoeffs:
    """Exponent coefficients a_s (for Ai) and a~_s (for Ai')."""

    a: tuple[Fraction, ...]        # a[s] valid for 1 <= s <= count
    a_tilde: tuple[Fraction, ...]
    count: int


def _run_recursion(seed: Fraction, s_max: int) -> tuple[Fraction, ...]:
    # a_{s+1} = (s+1)/2 a_s + 1/2 sum_{j=1}^{s-1} a_j a_{s-j}, a_1 = a_2 = seed
    a = [Fraction(0), seed, seed]
    for s in range(2, s_max):
        nxt = Fraction(s + 1, 2) * a[s]
        for j in range(1, s):
            nxt += Fraction(1, 2) * a[j] * a[s - j]
        a.append(nxt)
    return tuple(a[: s_max + 1])


@lru_cache(maxsize=None)
def exp_coeffs(s_max: int) -> ExpCoeffs:
    """Exact a_s, a~_s for 1 <= s <= s_max."""
    if s_max < 2:
        raise ValueError("s_max must be at least 2")
    return ExpCoeffs(
        a=_run_recursion(Fraction(5, 72), s_max),
        a_tilde=_run_recursion(Fraction(-7, 72), s_max),
        count=s_max,
    )


def _maclaurin(w: complex) -> AiryPair:
    """Ai, Ai' by the two power-series solutions, in scratch precision."""
    cancel_digits = 0.29 * abs(w) ** 1.5
    dps = int(cancel_digits) + 25
    with mp.workdps(dps):
        wm = mp.mpc(w)
        c1 = mp.power(3, mp.mpf(-2) / 3) / mp.gamma(mp.mpf(2) / 3)
        c2 = mp.power(3, mp.mpf(-1) / 3) / mp.gamma(mp.mpf(1) / 3)
        w3 = wm ** 3
        f = mp.mpc(1)
        fp = mp.mpc(0)
        g = wm
        gp = mp.mpc(1)
        t = mp.mpc(1)
        s = wm
        tol = mp.mpf(10) ** (-(dps + 2))
        k = 0
        while True:
            k += 1
            t = t * w3 / ((3 * k) * (3 * k - 1))
            s = s * w3 / ((3 * k + 1) * (3 * k))
            f += t
            g += s
            if wm:
                fp += 3 * k * t / wm
                gp += (3 * k + 1) * s / wm
            if abs(t) + abs(s) < tol * (abs(f) + abs(g)) or k > 600:
                break
        return AiryPair(complex(c1 * f - c2 * g), complex(c1 * fp - c2 * gp))


def lg_airy(kind: str, u: float, zeta, s_max: int = ASYMPT_S_MAX,
            xi=None, quarter_zeta=None, bk=DOUBLE):
    """Exponential-form asymptotic value of Ai (kind="ai") or Ai' ("aip").

    zeta may carry a non-principal branch by passing the tracked xi and
    zeta^(1/4) explicitly.  Returns (value, truncation) where truncation is
    the magnitude of the first omitted exponent term.
    """
    if kind not in ("ai", "aip"):
        raise ValueError("kind must be 'ai' or 'aip'")
    table = exp_coeffs(max(s_max + 1, 2))
    co = table.a if kind == "ai" else table.a_tilde
    zeta = bk.to_native(zeta)
    if xi is None:
        xi = bk.exp(1.5 * bk.log(zeta)) * 2 / 3
    if quarter_zeta is None:
        quarter_zeta = bk.sqrt(bk.sqrt(zeta))
    inv = 1.0 / (u * xi)
    acc = 0.0 * zeta
    p = 1.0 + 0.0 * zeta
    for s in range(1, s_max + 1):
        p = p * inv
        acc += (-1) ** s * bk.coeff(co[s]) * p / s
    trunc = abs(bk.coeff(table.a[s_max + 1])) * bk.abs(p * inv) / (s_max + 1)
    expo = -u * xi + acc
    if bk is DOUBLE and expo.real > _EXP_OVERFLOW:
        raise AiryRangeError(f"exp({expo.real:.1f}) overflows double range")
    uu = bk.real_pow(u, bk.frac(1, 6))
    spi = 2.0 * bk.sqrt(bk.to_native(bk.pi))
    if kind == "ai":
        value = bk.exp(expo) / (spi * uu * quarter_zeta)
    else:
        value = -uu * quarter_zeta * bk.exp(expo) / spi
    return value, trunc


def _airy_asymptotic(w: complex) -> AiryPair:
    if abs(cmath.phase(w)) <= 2 * math.pi / 3:
        ai, _ = lg_airy("ai", 1.0, w)
        aip, _ = lg_airy("aip", 1.0, w)
        return AiryPair(ai, aip)
    # near the negative axis, fold onto the two rotated rays
    rp, rm = _ROT[-1], _ROT[1]  # e^(2 pi i/3), e^(-2 pi i/3)
    a_m, _ = lg_airy("ai", 1.0, w * rm)
    ap_m, _ = lg_airy("aip", 1.0, w * rm)
    a_p, _ = lg_airy("ai", 1.0, w * rp)
    ap_p, _ = lg_airy("aip", 1.0, w * rp)
    ai = -rm * a_m - rp * a_p
    aip = -(rm * rm) * ap_m - (rp * rp) * ap_p
    return AiryPair(ai, aip)


def airy_eval(w) -> AiryPair:
    """Ai(w) and Ai'(w) for complex w.

    Raises AiryRangeError when the unscaled value overflows doubles; the
    decaying direction underflows gracefully to zero.
    """
    w = complex(w)
    if abs(w) <= MACLAURIN_RADIUS:
        return _maclaurin(w)
    return _airy_asymptotic(w)


def airy_rotated(j: int, w) -> AiryPair:
    """Ai_j(w) = Ai(w e^(-2 pi i j/3)) and its w-derivative, j in {-1, 0, 1}."""
    if j not in (-1, 0, 1):
        raise ValueError("rotation index must be -1, 0 or 1")
    rot = _ROT[j]
    pair = airy_eval(complex(w) * rot)
    return AiryPair(pair.value, rot * pair.derivative)
