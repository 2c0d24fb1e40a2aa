"""Series identities on the way from the Garrett-Ismail-Stanton sum to Jacobi's cube.

Every family evaluates both sides as :class:`TruncatedSeries` through
``q^order``.  Double sums over ``j >= j0, r >= 0`` are walked along levels
``j + r = const``; each term carries a lower bound for its exponents, and the
walk stops once that bound has exceeded the order and kept growing for
``PATIENCE`` consecutive levels.  All exponents here are quadratic in
``(j, r)`` with positive-definite leading part, so the bound grows without
returning.

Several families carry exponents like ``(2m+i)(2r+k+1)/2``.  Whenever every
exponent of an identity is a half-integer the whole identity is multiplied
by ``q^(1/2)``; the right side is then always zero, and the report notes the
shift.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache
from typing import Callable, Iterable

from .classical import jacobi_cube_lhs
from .laurent import LaurentPoly
from .qpoch import ONE, divide_inf, inf_product, inv_poch_finite, poch_inf, poch_poly, q_binomial, qq
from .rational import RationalFunction
from .report import InvalidInstance, VerificationReport, run_check
from .schur import Flavor, partial_theta, rr_sum, schur
from .series import TruncatedSeries
from .sums import bilateral_range, convex_range, monomial_sum, product_to_order

__all__ = [
    "PATIENCE",
    "IdentityFamily",
    "FAMILY_PARAMS",
    "level_sum",
    "verify_family",
    "default_grid",
    "verify_chain",
    "verify_reductions",
    "verify_inffin_support",
    "derive_theorem_from_chain",
    "lhs",
]

PATIENCE = 3


class IdentityFamily(str, enum.Enum):
    GIS = "GIS"
    AM = "AM"
    INFFIN = "INFFIN"
    LEMMA1 = "LEMMA1"
    LQUAD = "LQUAD"
    LLIN = "LLIN"
    INVERTED = "INVERTED"
    DEL = "DEL"
    SYMM = "SYMM"
    SYMM2 = "SYMM2"
    FIN = "FIN"
    ZERO1 = "ZERO1"
    ZERO2 = "ZERO2"
    ALTSUM = "ALTSUM"

    @classmethod
    def parse(cls, name) -> "IdentityFamily":
        if isinstance(name, cls):
            return name
        return cls(str(name).upper())


FAMILY_PARAMS: dict[IdentityFamily, tuple[str, ...]] = {
    IdentityFamily.GIS: ("m",),
    IdentityFamily.AM: ("m", "k"),
    IdentityFamily.INFFIN: ("r", "k"),
    IdentityFamily.LEMMA1: ("M", "n", "k"),
    IdentityFamily.LQUAD: ("m", "n", "i", "k"),
    IdentityFamily.LLIN: ("m", "n", "i", "k"),
    IdentityFamily.INVERTED: ("m", "n", "i", "k"),
    IdentityFamily.DEL: ("m", "n", "i", "k"),
    IdentityFamily.SYMM: ("m", "n", "k"),
    IdentityFamily.SYMM2: ("m", "n"),
    IdentityFamily.FIN: ("m",),
    IdentityFamily.ZERO1: ("a",),
    IdentityFamily.ZERO2: ("a",),
    IdentityFamily.ALTSUM: ("j",),
}


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def _bit(name: str, v: int) -> None:
    if v not in (0, 1):
        raise InvalidInstance(f"{name} must be 0 or 1")


# A term is (exponent, sign, binomials, extra): sign * q^exponent * extra *
# prod (1 + c q^b) over (b, c) in binomials.  extra=None means 1.
Term = tuple[int, int, tuple[tuple[int, int], ...], "LaurentPoly | None"]


def _floor(t: Term) -> float:
    e, _, binoms, extra = t
    if extra is not None:
        if extra.is_zero():
            return math.inf
        e += extra.low
    return e + sum(min(0, b) for b, _ in binoms)


def level_sum(term: Callable[[int, int], Iterable[Term]], order: int, j0: int = 1) -> TruncatedSeries:
    """``sum_{j >= j0, r >= 0} term(j, r)`` on exponents up to ``order``."""
    acc: dict[int, int] = {}
    s = 0
    run = 0
    prev = None
    while run < PATIENCE:
        lo = math.inf
        for r in range(s + 1):
            for t in term(j0 + s - r, r):
                f = _floor(t)
                lo = min(lo, f)
                if f > order:
                    continue
                e, sign, binoms, extra = t
                p = LaurentPoly.monomial(e, sign) if extra is None else extra.shift(e) * sign
                for b, c in binoms:
                    p = p.mul_binomial(b, c)
                for x, v in p.terms():
                    if x <= order:
                        acc[x] = acc.get(x, 0) + v
        if lo > order and (prev is None or lo >= prev):
            run += 1
        else:
            run = 0
        prev = lo
        s += 1
    return TruncatedSeries.from_poly(LaurentPoly(acc), order)


def _over_cube(s: TruncatedSeries) -> TruncatedSeries:
    return divide_inf(s, [(1, 1)], 3)


def _over_qq(s: TruncatedSeries, n: int) -> TruncatedSeries:
    for e in range(1, n + 1):
        s = s.div_binomial(e)
    return s


def _inv_qq_pair(a: int, b: int, order: int) -> TruncatedSeries:
    """``1 / ((q;q)_a (q;q)_b)``, zero when either index is negative."""
    if a < 0 or b < 0:
        return TruncatedSeries.zero(order)
    return _over_qq(_over_qq(TruncatedSeries.one(order), a), b)


def _geometric(length: int, step: int) -> LaurentPoly:
    """``(1 - q^(length*step)) / (1 - q^step)`` for ``length >= 0``."""
    return LaurentPoly((t * step, 1) for t in range(length))


class Sides:
    """Left and right side plus an optional note (the half-integer shift)."""

    def __init__(self, lhs, rhs, note: str = ""):
        self.lhs, self.rhs, self.note = lhs, rhs, note


# ----------------------------------------------------------- GIS, AM, INFFIN

def _gis(m: int, order: int):
    if m < 0:
        raise InvalidInstance("GIS needs m >= 0")
    c = _c2(m)
    sgn = (-1) ** (m % 2)
    d = divide_inf(TruncatedSeries.from_poly(schur(Flavor.D, m).shift(-c) * sgn, order), [(1, 5), (4, 5)])
    e = divide_inf(TruncatedSeries.from_poly(schur(Flavor.E, m).shift(-c) * sgn, order), [(2, 5), (3, 5)])
    return rr_sum(m, order), d - e


def _theta_i(r: int, k: int, i: int) -> LaurentPoly:
    return partial_theta(r, k, 2 * i + 4 * k - 5)


def _am(m: int, k: int, order: int):
    _bit("k", k)
    if m < 0:
        raise InvalidInstance("AM needs m >= 0")
    lhs = rr_sum(2 * m + k + 2, order)
    rhs = TruncatedSeries.zero(order)
    for r in range(m + 1):
        cof = poch_poly(m - r + 1, r) * poch_poly(m + r + k + 2, m - r)
        base = cof.mul_binomial(2 * r + k + 1).shift(-_c2(2 * r + k + 2))
        for i in (1, 2):  # the i-sum stays innermost
            s = TruncatedSeries.from_poly(base * _theta_i(r, k, i) * (-1) ** (i + 1), order)
            s = _over_qq(_over_qq(s, m), 2 * m + k + 1)
            rhs = rhs + divide_inf(s, [(i + 2 * k, 5), (5 - i - 2 * k, 5)])
    return lhs, rhs


def _inffin_valuation(j: int, r: int, k: int) -> int | None:
    """Valuation of the ``j``-th left term, ``None`` when a factor ``1 - q^0`` kills it."""
    x = 2 * j - k
    mu, nu = x % 5, x // 5
    if mu == 0:
        return None
    return _c2(j + r) - nu * mu - 5 * _c2(nu)


def _inffin_lhs(r: int, k: int, order: int) -> TruncatedSeries:
    acc = TruncatedSeries.zero(order)
    for c in range(1, 6):
        if _inffin_valuation(c, r, k) is None:
            continue
        for t in convex_range(lambda t: _inffin_valuation(c + 5 * t, r, k), order):
            j = c + 5 * t
            if _inffin_valuation(j, r, k) > order:
                continue
            shift = _c2(j + r)
            work = order - shift
            prod = product_to_order([
                lambda N, j=j: poch_inf(2 * j - k, 5, N),
                lambda N, j=j: poch_inf(5 + k - 2 * j, 5, N),
                lambda N: poch_inf(5, 5, N),
            ], work)
            term = divide_inf(prod, [(1, 1)]).shift(shift)
            acc = acc + term * (-1) ** (j % 2)
    return acc


def _inffin_rhs(r: int, k: int, order: int) -> TruncatedSeries:
    rhs = TruncatedSeries.zero(order)
    for i in (1, 2):
        p = _theta_i(r, k, i).shift(-_c2(2 * r + k + 2)) * (-1) ** ((i + r) % 2)
        rhs = rhs + divide_inf(TruncatedSeries.from_poly(p, order), [(i + 2 * k, 5), (5 - i - 2 * k, 5)])
    return rhs


def _inffin(r: int, k: int, order: int):
    _bit("k", k)
    if r < 0:
        raise InvalidInstance("INFFIN needs r >= 0")
    return _inffin_lhs(r, k, order), _inffin_rhs(r, k, order)


# -------------------------------------------------- finite l-sum window and its reductions

def _lemma1_lhs(M: int, n: int, k: int, order: int) -> TruncatedSeries:
    if M < 0:
        return TruncatedSeries.zero(order)

    @lru_cache(maxsize=None)
    def lsum(r: int) -> LaurentPoly:
        return sum((q_binomial(M, l).shift(_c2(M - l) + _c2(l) + l * (r + k + 1) - r * (M - l))
                    for l in range(M + 1)), LaurentPoly())

    def term(j, r):
        e = n * (n + 2) + _c2(j + r) - n * (2 * j - k)
        extra = _geometric(2 * j - k, 2 * n + 1) * lsum(r)
        yield e, (-1) ** ((M + j + r + 1) % 2), ((2 * r + k + 1, -1),), extra

    return _over_cube(_over_qq(level_sum(term, order), M))


def _lemma1(M: int, n: int, k: int, order: int):
    _bit("k", k)
    if M % 2:
        rhs = TruncatedSeries.zero(order)
    else:
        m = M // 2
        rhs = _inv_qq_pair(m - n, m + n + 1, order - m * (m + k)).shift(m * (m + k)) if m >= 0 \
            else TruncatedSeries.zero(order)
    return _lemma1_lhs(M, n, k, order), rhs


def _l_sum(m: int, n: int, i: int, k: int, order: int, quad: bool) -> TruncatedSeries:
    if 2 * m + i < 0:
        return TruncatedSeries.zero(order)

    @lru_cache(maxsize=None)
    def lsum(r: int) -> LaurentPoly:
        acc = LaurentPoly()
        for l in range(-m - i, m + 1):
            e = l * (l + 2 * r + k + i + 1) if quad else l * (2 * r + k + 1)
            acc = acc + q_binomial(2 * m + i, m - l).shift(e)
        return acc

    pre = n * (n + 2) if quad else 2 * n * (n + 1)

    def term(j, r):
        e = pre + _c2(j + r) + i * r - n * (2 * j - k)
        extra = _geometric(2 * j - k, 2 * n + 1) * lsum(r)
        yield e, (-1) ** ((j + r + 1) % 2), ((2 * r + k + 1, -1),), extra

    return _over_cube(_over_qq(level_sum(term, order), 2 * m + i))


def _lquad(m, n, i, k, order):
    _bit("i", i)
    _bit("k", k)
    rhs = _inv_qq_pair(m - n, m + n + 1, order) if i == 0 else TruncatedSeries.zero(order)
    return _l_sum(m, n, i, k, order, True), rhs


def _llin(m, n, i, k, order):
    _bit("i", i)
    _bit("k", k)
    if i == 0:
        rhs = _inv_qq_pair(m - n, m + n + 1, order - (m - n)).shift(m - n)
    else:
        rhs = TruncatedSeries.zero(order)
    return _l_sum(m, n, i, k, order, False), rhs


def _inverted_lhs(m, n, i, k, order):
    def term(j, r):
        e = 2 * n * (n + 1) + _c2(j + r) + i * r - n * (2 * j - k) - (m + i) * (2 * r + k + 1)
        binoms = (((2 * n + 1) * (2 * j - k), -1), (2 * r + k + 1, -1), ((2 * m + i) * (2 * r + k + 1), 1))
        yield e, (-1) ** ((j + r + 1) % 2), binoms, None

    return _over_cube(level_sum(term, order))


def _inverted_rhs_sum(m: int, n: int, order: int) -> TruncatedSeries:
    """The r-sum on the right, with ``(1 - q^(2m)) (q;q)_{r+m-1} = 2`` at ``m = r = 0``."""
    acc = TruncatedSeries.zero(order)
    for r in range(m + 1):
        if r - n < 0 or r + n + 1 < 0:
            continue
        w = LaurentPoly(2) if m == r == 0 else qq(r + m - 1).mul_binomial(2 * m)
        p = w.mul_binomial(2 * n + 1).shift(_c2(m - r) + r - n) * (-1) ** ((m - r) % 2)
        s = TruncatedSeries.from_poly(p, order)
        acc = acc + _over_qq(_over_qq(_over_qq(s, m - r), r - n), r + n + 1)
    return acc


def _inverted_rhs_closed(m: int, n: int, order: int) -> TruncatedSeries:
    """Closed form of the same sum after q-Chu-Vandermonde."""
    mu = max(n, -n - 1)
    if m - n < 0 or m + n + 1 < 0:
        return TruncatedSeries.zero(order)
    # (1 - q^(2m)) (q;q)_{m+mu-1}, which is (1 + q^m)(q;q)_m at mu = 0
    w = LaurentPoly(2) if m + mu == 0 else qq(m + mu - 1).mul_binomial(2 * m)
    p = w.mul_binomial(2 * mu + 1) * (-1) ** ((m + n) % 2)
    tail = inv_poch_finite(2, 1, mu - m)
    rat = RationalFunction(p * tail.num, tail.den)
    s = rat.to_series(order)
    return _over_qq(_over_qq(s, m - n), m + n + 1)


def _inverted(m, n, i, k, order):
    _bit("i", i)
    _bit("k", k)
    if m < 0:
        raise InvalidInstance("INVERTED needs m >= 0")
    lhs = _inverted_lhs(m, n, i, k, order)
    if i == 0:
        rhs = [_inverted_rhs_sum(m, n, order), _inverted_rhs_closed(m, n, order)]
    else:
        rhs = [TruncatedSeries.zero(order)] * 2
    return [lhs, lhs], rhs


def _del_lhs(m, n, i, k, order) -> tuple[TruncatedSeries, int]:
    half = (i * (k + 1)) % 2

    def term(j, r):
        two_e = 2 * (2 * n * (n + 1) + _c2(j + r) - n * (2 * j - k)) - (2 * m + i) * (2 * r + k + 1)
        binoms = (((2 * n + 1) * (2 * j - k), -1), (2 * r + k + 1, -1), ((2 * m + i) * (2 * r + k + 1), 1))
        yield (two_e + half) // 2, (-1) ** ((j + r + 1) % 2), binoms, None

    return _over_cube(level_sum(term, order)), half


def _half_note(half: int) -> str:
    return "both sides multiplied by q^(1/2)" if half else ""


def _del(m, n, i, k, order):
    _bit("i", i)
    _bit("k", k)
    lhs, half = _del_lhs(m, n, i, k, order)
    val = 0
    if i == 0:
        val = (m == n) + (-m == n) - (m - 1 == n) - (-m - 1 == n)
    assert not (half and val), "half-integral identity with nonzero right side"
    return Sides(lhs, TruncatedSeries.from_poly(val, order), _half_note(half))


def _symm_lhs(m, n, k, order) -> tuple[TruncatedSeries, int]:
    half = ((n - m) * (1 + k)) % 2

    def term(j, r):
        two_e = 2 * _c2(n) + (n - m) + 2 * _c2(j + r) - (n - 1) * (2 * j - k) - (m - 1) * (2 * r + k)
        binoms = ((n * (2 * j - k), -1), (m * (2 * r + k + 1), -1))
        yield (two_e + half) // 2, (-1) ** ((j + r + n) % 2), binoms, None

    return _over_cube(level_sum(term, order)), half


def _symm(m, n, k, order):
    _bit("k", k)
    lhs, half = _symm_lhs(m, n, k, order)
    val = (m == n) - (-m == n)
    assert not (half and val), "half-integral identity with nonzero right side"
    return Sides(lhs, TruncatedSeries.from_poly(val, order), _half_note(half))


def _symm2_lhs(m, n, order) -> TruncatedSeries:
    def term(j, r):
        e = _c2(n) + _c2(j + r) - (n - 1) * j - (m - 1) * r
        sign = (-1) ** ((j + r + n) % 2)
        yield e, sign, (), None
        if j >= 1:
            yield e + 2 * n * j + m * (2 * r + 1), sign, (), None

    return _over_cube(level_sum(term, order, j0=0))


def _symm2(m, n, order):
    return _symm2_lhs(m, n, order), TruncatedSeries.from_poly(int(m == n), order)


# ------------------------------------------------------ FIN and the zero sums

def _fin_lhs(m: int, order: int) -> TruncatedSeries:
    """Iterated sum, ``r`` inside: each inner sum is exact on the window first."""
    acc: dict[int, int] = {}
    cap = 10 * (abs(order) + abs(m)) + 100
    for start, step in ((0, 1), (-1, -1)):
        j = start
        run = 0
        while run < PATIENCE:
            if abs(j) > cap:
                raise RuntimeError("FIN outer sum did not settle")
            f = lambda r, j=j: _c2(j - r) - m * r
            inner: dict[int, int] = {}
            for r in convex_range(f, order, 0):
                e = f(r)
                if e <= order:
                    inner[e] = inner.get(e, 0) + (-1) ** ((j + r) % 2)
            inner = {e: v for e, v in inner.items() if v}
            run = 0 if inner else run + 1
            for e, v in inner.items():
                acc[e] = acc.get(e, 0) + v
            j += step
    return TruncatedSeries.from_poly(LaurentPoly(acc), order)


def _fin(m, order):
    lhs = _fin_lhs(m, order)
    if m == 0:
        rhs = [inf_product([(1, 1)], order, 3), jacobi_cube_lhs(order)]
        return [lhs, lhs], rhs
    # second route: fin|_m = q^m fin|_{-m}
    mirrored = _fin_lhs(-m, order - m).shift(m)
    return [lhs, lhs], [TruncatedSeries.zero(order), mirrored]


def _zero1(a, order):
    f = lambda r: _c2(r + 1) + a * (r + 1)
    g = lambda r: _c2(r + 1) - a * r
    lhs = monomial_sum(((f(r), (-1) ** r) for r in convex_range(f, order)), order)
    rhs = monomial_sum(((g(r), (-1) ** r) for r in convex_range(g, order)), order)
    return lhs, rhs


def _zero2(a, order):
    f = lambda r: _c2(r + 1) - a * r
    lhs = monomial_sum(((f(r), (-1) ** (r % 2)) for r in bilateral_range(f, order, centre=a)), order)
    return lhs, TruncatedSeries.zero(order)


def _altsum(j):
    if j < 0:
        raise InvalidInstance("ALTSUM needs j >= 0")
    return monomial_sum((_c2(j - r), (-1) ** r) for r in range(2 * j)), LaurentPoly()


_DISPATCH = {
    IdentityFamily.GIS: _gis,
    IdentityFamily.AM: _am,
    IdentityFamily.INFFIN: _inffin,
    IdentityFamily.LEMMA1: _lemma1,
    IdentityFamily.LQUAD: _lquad,
    IdentityFamily.LLIN: _llin,
    IdentityFamily.INVERTED: _inverted,
    IdentityFamily.DEL: _del,
    IdentityFamily.SYMM: _symm,
    IdentityFamily.SYMM2: _symm2,
    IdentityFamily.FIN: _fin,
    IdentityFamily.ZERO1: _zero1,
    IdentityFamily.ZERO2: _zero2,
}


def verify_family(family, params: dict[str, int], order: int | None = None) -> VerificationReport:
    """One instance of a chain identity; ``order`` is ignored for the exact ALTSUM family."""
    fam = IdentityFamily.parse(family)
    names = FAMILY_PARAMS[fam]
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise InvalidInstance(f"{fam.value} takes parameters {', '.join(names)}")
    args = [int(params[p]) for p in names]
    label = fam.value.lower()
    if fam is IdentityFamily.ALTSUM:
        return run_check(label, dict(params), lambda: _altsum(*args))
    if order is None or order < 0:
        raise InvalidInstance("series families need an order >= 0")
    note = ""

    def compute():
        nonlocal note
        out = _DISPATCH[fam](*args, order)
        if isinstance(out, Sides):
            note = out.note
            return out.lhs, out.rhs
        return out

    rep = run_check(label, dict(params), compute, order)
    if note and not rep.note:
        rep.note = note
    return rep


def lhs(family, params: dict[str, int], order: int) -> tuple[TruncatedSeries, int]:
    """Left side of a DEL or SYMM instance together with its half-integer flag."""
    fam = IdentityFamily.parse(family)
    if fam is IdentityFamily.DEL:
        return _del_lhs(params["m"], params["n"], params["i"], params["k"], order)
    if fam is IdentityFamily.SYMM:
        return _symm_lhs(params["m"], params["n"], params["k"], order)
    if fam is IdentityFamily.SYMM2:
        return _symm2_lhs(params["m"], params["n"], order), 0
    raise ValueError(f"no left-side accessor for {fam.value}")


def _rng(a: int, b: int):
    return range(a, b + 1)


def default_grid() -> dict[IdentityFamily, list[dict[str, int]]]:
    """Parameter grid used by :func:`verify_chain` when none is given."""
    F = IdentityFamily
    w = _rng(-4, 4)
    bits = (0, 1)
    return {
        F.GIS: [{"m": m} for m in _rng(0, 4)],
        F.AM: [{"m": m, "k": k} for m in _rng(0, 4) for k in bits],
        F.INFFIN: [{"r": r, "k": k} for r in _rng(0, 4) for k in bits],
        F.LEMMA1: [{"M": M, "n": n, "k": k} for M in _rng(0, 7) for n in w for k in bits],
        F.LQUAD: [{"m": m, "n": n, "i": i, "k": k} for m in _rng(0, 4) for n in w for i in bits for k in bits],
        F.LLIN: [{"m": m, "n": n, "i": i, "k": k} for m in _rng(0, 4) for n in w for i in bits for k in bits],
        F.INVERTED: [{"m": m, "n": n, "i": i, "k": k} for m in _rng(0, 4) for n in w for i in bits for k in bits],
        F.DEL: [{"m": m, "n": n, "i": i, "k": k} for m in w for n in w for i in bits for k in bits],
        F.SYMM: [{"m": m, "n": n, "k": k} for m in w for n in w for k in bits],
        F.SYMM2: [{"m": m, "n": n} for m in w for n in w],
        F.FIN: [{"m": m} for m in w],
        F.ZERO1: [{"a": a} for a in w],
        F.ZERO2: [{"a": a} for a in w],
        F.ALTSUM: [{"j": j} for j in _rng(0, 4)],
    }


def verify_chain(order: int, grid: dict | None = None, reductions: bool | None = None) -> list[VerificationReport]:
    """Every family over ``grid`` (default :func:`default_grid`), then the reduction cross-checks.

    The reductions run by default only with the default grid; an explicit empty
    grid gives an empty list.
    """
    if reductions is None:
        reductions = grid is None
    grid = default_grid() if grid is None else grid
    out = []
    for fam, plist in grid.items():
        for params in plist:
            out.append(verify_family(fam, params, order))
    if reductions:
        out.extend(verify_reductions(order))
    return out


# ------------------------------------------------------------- cross-checks

def _shifted(s: TruncatedSeries, k: int, order: int) -> TruncatedSeries:
    return s.shift(k).truncate(order)


def _del_from_symm(m, n, i, k, order):
    d, hd = _del_lhs(m, n, i, k, order)
    a, ha = _symm_lhs(2 * m + i + 1, 2 * n + 1, k, order)
    b, hb = _symm_lhs(2 * m + i - 1, 2 * n + 1, k, order)
    if not hd == ha == hb:
        raise RuntimeError("half-integer flags disagree")
    return d, a - b


def _symm_k_swap(m, n, order):
    two = m * m - n * n
    s, h = _symm_lhs(n, m, 0, order)
    if two % 2 != h:
        raise RuntimeError("half-integer flags disagree")
    shift = (two - h) // 2
    t, _ = _symm_lhs(m, n, 1, order - shift)
    return _shifted(t, shift, order) * (-1) ** ((m - n) % 2), s


def _symm_from_symm2(m, n, order):
    half = (m - n) // 2
    left = _symm2_lhs(m, n, order) - _shifted(_symm2_lhs(m, -n, order + n), -n, order)
    s, _ = _symm_lhs(m, n, 0, order - half)
    return left, _shifted(s, half, order)


def verify_reductions(order: int, window: int = 4) -> list[VerificationReport]:
    """The three linear relations between DEL, SYMM (both k) and SYMM2, on ``|m|, |n| <= window``."""
    w = _rng(-window, window)
    out = []
    for m in w:
        for n in w:
            for i in (0, 1):
                for k in (0, 1):
                    out.append(run_check("del-from-symm", {"m": m, "n": n, "i": i, "k": k},
                                         lambda m=m, n=n, i=i, k=k: _del_from_symm(m, n, i, k, order), order))
    for m in w:
        for n in w:
            out.append(run_check("symm-k-swap", {"m": m, "n": n}, lambda m=m, n=n: _symm_k_swap(m, n, order), order))
    for m in w:
        for n in w:
            if (m - n) % 2 == 0:
                out.append(run_check("symm-from-symm2", {"m": m, "n": n},
                                     lambda m=m, n=n: _symm_from_symm2(m, n, order), order))
    return out


def verify_inffin_support(order: int, r_max: int = 12) -> list[VerificationReport]:
    """The four auxiliary facts used to establish INFFIN."""
    out = []
    for m in range(1, 5):
        for n in range(-3, 4):
            def shift_id(m=m, n=n):
                left = product_to_order([lambda N: poch_inf(m + 5 * n, 5, N),
                                         lambda N: poch_inf(5 - 5 * n - m, 5, N)], order)
                e = -n * m - 5 * _c2(n)
                right = product_to_order([lambda N: poch_inf(m, 5, N), lambda N: poch_inf(5 - m, 5, N)], order - e)
                return left, _shifted(right, e, order) * (-1) ** (n % 2)
            out.append(run_check("inffin-shift", {"m": m, "n": n}, shift_id, order))
    for i in (1, 2):
        for k in (0, 1):
            def ratio(i=i, k=k):
                left = product_to_order([lambda N: poch_inf(2 * i - k, 5, N), lambda N: poch_inf(5 + k - 2 * i, 5, N),
                                         lambda N: poch_inf(5, 5, N)], order)
                return divide_inf(left, [(1, 1)]), inf_product([(i + 2 * k, 5), (5 - i - 2 * k, 5)], order, -1)
            out.append(run_check("inffin-ratio", {"i": i, "k": k}, ratio, order))
            out.append(run_check(
                "inffin-exponent", {"i": i, "k": k},
                lambda i=i, k=k: ([2 * _c2(i + r) - (r + 1) * (5 * r + 2 * i + 4 * k) for r in range(-r_max, r_max + 1)],
                                  [-2 * _c2(2 * r + k + 2) for r in range(-r_max, r_max + 1)]),
            ))
    for k in (0, 1):
        def split(k=k):
            top = 5 * r_max
            got = sorted(x for j in range(r_max) for i in (1, 2) for x in (5 * j + i, 5 * j + 5 - i + k) if x <= top)
            want = [j for j in range(1, top + 1) if (j - 3 * k) % 5]
            return got, want
        out.append(run_check("inffin-split", {"k": k}, split))
    return out


def derive_theorem_from_chain(m_max: int) -> list[VerificationReport]:
    """Schur polynomials as q-weighted sums of partial theta sums, cleared of denominators.

    ``(q;q)_{2m+k+1} x_{2m+k+2} = sum_r q^(C(2m+k+2,2) - C(2r+k+2,2)) (1 - q^(2r+k+1)) [2m+k+1, m-r] theta_r``.
    """
    out = []
    for m in range(m_max + 1):
        for k in (0, 1):
            for f in (Flavor.E, Flavor.D):
                def compute(m=m, k=k, f=f):
                    top = 2 * m + k + 2
                    left = schur(f, top) * qq(top - 1)
                    right = LaurentPoly()
                    for r in range(m + 1):
                        t = partial_theta(r, k, f.theta_linear).mul_binomial(2 * r + k + 1)
                        t = t * q_binomial(top - 1, m - r)
                        right = right + t.shift(_c2(top) - _c2(2 * r + k + 2))
                    return left, right
                out.append(run_check("derive-thm", {"m": m, "k": k, "i": f.index}, compute))
    return out
