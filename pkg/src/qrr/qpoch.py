"""q-Pochhammer symbols and Gaussian binomials at q-power arguments.

Arguments are always ``a = sign * q^m`` with base ``q^b``, so every factor is a
binomial ``1 - sign*q^e`` and the kernels in :mod:`qrr.laurent` apply.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable

from .laurent import LaurentPoly
from .rational import RationalFunction
from .series import TruncatedSeries

__all__ = [
    "poch_poly",
    "qq",
    "poch_finite",
    "inv_poch_finite",
    "poch_inf",
    "inf_product",
    "divide_inf",
    "q_binomial",
    "ONE",
]

ONE = LaurentPoly(1)


def poch_poly(m: int, n: int, b: int = 1, sign: int = 1) -> LaurentPoly:
    """``prod_{j<n} (1 - sign*q^(m+j*b))`` for ``n >= 0``."""
    if n < 0:
        raise ValueError("poch_poly needs n >= 0; use poch_finite for negative lengths")
    p = ONE
    for j in range(n):
        p = p.mul_binomial(m + j * b, -sign)
    return p


_qq_lock = threading.Lock()
_qq_cache: list[LaurentPoly] = [ONE]


def qq(n: int) -> LaurentPoly:
    """``(q;q)_n`` as a polynomial, memoised.  Zero-length and negative ``n`` give 1 and raise respectively."""
    if n < 0:
        raise ValueError("(q;q)_n for n < 0 is not a polynomial")
    cache = _qq_cache
    if n < len(cache):
        return cache[n]
    with _qq_lock:
        while len(cache) <= n:
            cache.append(cache[-1].mul_binomial(len(cache)))
        return cache[n]


def poch_finite(m: int, b: int, n: int) -> RationalFunction:
    """``(q^m; q^b)_n`` for any integer ``n``.

    Negative lengths use ``(a;q)_n = 1 / prod_{j=1}^{-n} (1 - a q^(-j b))``.
    When that denominator contains ``1 - q^0`` the symbol is a pole and
    ``ZeroDivisionError`` is raised; :func:`inv_poch_finite` returns the
    reciprocal, which is then exactly zero.
    """
    if b <= 0:
        raise ValueError("base exponent b must be positive")
    if n >= 0:
        return RationalFunction(poch_poly(m, n, b))
    den = ONE
    for j in range(1, -n + 1):
        e = m - j * b
        if e == 0:
            raise ZeroDivisionError(f"(q^{m};q^{b})_{n} has a vanishing factor in its denominator")
        den = den.mul_binomial(e)
    return RationalFunction(ONE, den)


def inv_poch_finite(m: int, b: int, n: int) -> RationalFunction:
    """``1 / (q^m; q^b)_n``; exactly zero when ``n < 0`` meets a ``1 - q^0`` factor."""
    if b <= 0:
        raise ValueError("base exponent b must be positive")
    if n >= 0:
        den = poch_poly(m, n, b)
        if den.is_zero():
            raise ZeroDivisionError(f"(q^{m};q^{b})_{n} vanishes")
        return RationalFunction(ONE, den)
    num = ONE
    for j in range(1, -n + 1):
        num = num.mul_binomial(m - j * b)
    return RationalFunction(num)


def poch_inf(m: int, b: int, order: int, sign: int = 1) -> TruncatedSeries:
    """``prod_{j>=0} (1 - sign*q^(m+j*b))`` through ``q^order``.

    Factors with negative exponent form a finite Laurent prefix; the remaining
    factors are units and those with exponent beyond the working order are
    skipped since they cannot touch the window.
    """
    if b <= 0:
        raise ValueError("base exponent b must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    prefix = ONE
    e = m
    while e < 0:
        prefix = prefix.mul_binomial(e, -sign)
        e += b
    if e == 0:
        if sign == 1:
            return TruncatedSeries.zero(order)
        prefix = prefix * 2
        e += b
    work = order - prefix.low
    s = TruncatedSeries.one(work)
    while e <= work:
        s = s.mul_binomial(e, -sign)
        e += b
    return (s * prefix).truncate(order)


def inf_product(factors: Iterable[tuple[int, int]], order: int, power: int = 1) -> TruncatedSeries:
    """``prod (q^m; q^b)_oo ^ power`` for the given ``(m, b)`` pairs, ``m >= 1``.

    Negative powers divide factor by factor, which keeps the cost linear in
    the order for each binomial.
    """
    s = TruncatedSeries.one(order)
    for m, b in factors:
        if m <= 0:
            raise ValueError("inf_product expects positive base exponents; use poch_inf")
        for _ in range(abs(power)):
            e = m
            while e <= order:
                s = s.mul_binomial(e) if power > 0 else s.div_binomial(e)
                e += b
    return s


def divide_inf(s: TruncatedSeries, factors: Iterable[tuple[int, int]], power: int = 1) -> TruncatedSeries:
    """``s / prod (q^m; q^b)_oo ^ power`` keeping the order of ``s``.

    ``s`` may have negative valuation; factors up to ``q^(order - valuation)``
    can still reach the window and are all applied.
    """
    if s.is_zero():
        return s
    top = s.order - s.valuation
    for m, b in factors:
        if m <= 0:
            raise ValueError("divide_inf expects positive base exponents")
        for _ in range(power):
            e = m
            while e <= top:
                s = s.div_binomial(e)
                e += b
    return s


@lru_cache(maxsize=4096)
def _qbin(n: int, m: int) -> LaurentPoly:
    if m == 0:
        return ONE
    # [n, m] = [n, m-1] (1 - q^(n-m+1)) / (1 - q^m)
    return _qbin(n, m - 1).mul_binomial(n - m + 1).div_binomial(m)


def q_binomial(n: int, m: int) -> LaurentPoly:
    """Gaussian binomial ``[n, m]``; zero unless ``0 <= m <= n``."""
    if m < 0 or n < 0 or m > n:
        return LaurentPoly()
    m = min(m, n - m)
    if m > 200:
        # build the row iteratively so the recursion stays shallow
        for k in range(0, m, 200):
            _qbin(n, k)
    return _qbin(n, m)
