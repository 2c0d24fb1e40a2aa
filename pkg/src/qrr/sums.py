"""Summation helpers: index ranges for convex exponents, products at a target order."""

from __future__ import annotations

from typing import Callable, Iterator, Sequence

from .laurent import LaurentPoly
from .series import TruncatedSeries

__all__ = ["convex_range", "bilateral_range", "product_to_order", "monomial_sum"]


def convex_range(f: Callable[[int], int], bound: int, start: int = 0, step: int = 1) -> Iterator[int]:
    """Indices ``start, start+step, ...`` while ``f`` may still be ``<= bound``.

    ``f`` must be convex along the walk (a quadratic with positive leading
    coefficient, say).  The walk stops at the first index where ``f`` already
    exceeds ``bound`` and is no longer decreasing, after which it never comes
    back down.
    """
    n = start
    while True:
        v = f(n)
        if v > bound and f(n + step) >= v:
            return
        yield n
        n += step


def bilateral_range(f: Callable[[int], int], bound: int, centre: int = 0) -> list[int]:
    """All integers ``n`` (from a convex ``f``) whose value is ``<= bound``, ascending."""
    up = [n for n in convex_range(f, bound, centre, 1) if f(n) <= bound]
    down = [n for n in convex_range(f, bound, centre - 1, -1) if f(n) <= bound]
    return sorted(down + up)


def monomial_sum(terms, order: int | None = None):
    """Collect ``(exponent, coefficient)`` pairs into a polynomial, or a series when ``order`` is given."""
    acc: dict[int, int] = {}
    for e, c in terms:
        if order is not None and e > order:
            continue
        acc[e] = acc.get(e, 0) + c
    p = LaurentPoly(acc)
    return p if order is None else TruncatedSeries.from_poly(p, order)


def product_to_order(factors: Sequence[Callable[[int], TruncatedSeries]], order: int) -> TruncatedSeries:
    """Multiply series given as ``order -> series`` builders, exact through ``order``.

    A first pass at ``order`` reveals each factor's valuation; negative
    valuations cost the other factors precision, so they are rebuilt with
    that much headroom.
    """
    vals = [f(order).valuation for f in factors]
    result = None
    for i, f in enumerate(factors):
        need = order - sum(min(v, 0) for j, v in enumerate(vals) if j != i)
        s = f(need)
        result = s if result is None else result * s
    if result is None:
        return TruncatedSeries.one(order)
    return result.truncate(order)
