"""Exact polynomial arithmetic on Fraction coefficient lists (ascending powers).

Every table in the package (coefficient polynomials, Maclaurin series of the
mapping near the turning point, exponent coefficients for the Airy
expansions) is built once in exact rational arithmetic; floating conversion
happens only at evaluation time.
"""

from __future__ import annotations

from fractions import Fraction

Poly = tuple[Fraction, ...]

_ZERO = Fraction(0)


def trim(p) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def add(a, b) -> Poly:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO)
        for i in range(n)
    )


def scale(a, k) -> Poly:
    k = Fraction(k)
    return trim(c * k for c in a)


def mul(a, b) -> Poly:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(out)


def shift(a, k: int) -> Poly:
    """Multiply by x^k."""
    return trim((_ZERO,) * k + tuple(a))


def deriv(a) -> Poly:
    if len(a) <= 1:
        return (_ZERO,)
    return trim(a[i] * i for i in range(1, len(a)))


def horner(a, x, conv=float):
    """Evaluate at x; coefficients converted by `conv` (float or mpf)."""
    acc = 0.0 * x
    for c in reversed(a):
        acc = acc * x + conv(c)
    return acc


def horner_exact(a, x):
    """Evaluate keeping exact arithmetic (x a Fraction or int)."""
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def series_mul(a, b, order: int) -> Poly:
    """Product truncated to degree `order` (inclusive)."""
    out = [_ZERO] * (order + 1)
    for i, ai in enumerate(a):
        if i > order or not ai:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return tuple(out)


def series_nth_root(s, n: int, order: int) -> Poly:
    """Coefficients of s(x)^(1/n) with s(0) = 1, to degree `order`.

    Solved term by term from f^n = s; the degree-k coefficient of f^n is
    n*f_k plus products of lower-order coefficients only.
    """
    if s[0] != 1:
        raise ValueError("series_nth_root requires unit constant term")
    f = [Fraction(1)] + [_ZERO] * order
    for k in range(1, order + 1):
        fn = [Fraction(1)]
        for _ in range(n):
            fn = list(series_mul(fn, f, k))
        target = s[k] if k < len(s) else _ZERO
        f[k] = (target - fn[k]) / n
    return tuple(f)


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """B_0 .. B_{n_max} (B_1 = -1/2 convention) by the defining recurrence."""
    from math import comb

    b = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += comb(m + 1, j) * b[j]
        b.append(-acc / (m + 1))
    return b
