"""Schur polynomials, partial theta sums and the finite identities built on them.

``e_n`` and ``d_n`` are reached three ways (recurrence, alternating q-binomial
sum, positive q-binomial sum).  The remaining functions check the partial
theta identities for the Schur polynomials, the Szego-polynomial analogue, the
Euler-type analogue, Jordan's recurrence and the coefficient identity obtained
from the multiple-sum comparison, each as exact polynomial (or rational)
equality.
"""

from __future__ import annotations

import enum
import threading
from functools import lru_cache

from .laurent import LaurentPoly
from .qpoch import ONE, inf_product, poch_poly, q_binomial, qq
from .rational import RationalFunction
from .report import InvalidInstance, VerificationReport, run_check
from .series import TruncatedSeries

__all__ = [
    "Flavor",
    "SchurFamily",
    "schur",
    "schur_bosonic",
    "schur_fermionic",
    "szego",
    "partial_theta",
    "theorem_rhs",
    "theorem_rhs_by_division",
    "aj_summand",
    "aj_rhs",
    "eulerpol_rhs",
    "wslim_sides",
    "coeff_identity_sides",
    "check_theorem",
    "rrpoly_sides",
    "rrpoly_check",
    "aj_check",
    "eulerpol_check",
    "wslim_check",
    "frec_check",
    "frec_telescoped_check",
    "coeff_check",
    "schur_three_way_check",
    "verify_theorem",
    "verify_rrpoly",
    "verify_aj",
    "verify_eulerpol",
    "verify_frec",
    "verify_coeff_identity",
    "verify_schur_three_way",
    "rr_sum",
    "rr_check",
]


class Flavor(str, enum.Enum):
    """``E`` for e_n (gaps >= 2), ``D`` for d_n (gaps >= 2, no part 1)."""

    E = "E"
    D = "D"

    @property
    def theta_linear(self) -> int:
        """Linear coefficient ``c`` of the matching partial theta sum ``j(5j+c)/2``."""
        return 1 if self is Flavor.E else 3

    @property
    def index(self) -> int:
        """The ``i`` of the partition-theoretic setting: 2 for E, 1 for D."""
        return 2 if self is Flavor.E else 1


def _flavor(f) -> Flavor:
    return f if isinstance(f, Flavor) else Flavor(str(f).upper())


class SchurFamily:
    """Memoised solutions of ``x_{n+2} = x_{n+1} + q^n x_n``.

    The cache only ever grows, under a lock, so concurrent readers see either
    the old list or a longer one with identical entries.
    """

    def __init__(self, flavor: Flavor):
        self.flavor = flavor
        if flavor is Flavor.E:
            self._cache = [LaurentPoly(), ONE, ONE]
        else:
            self._cache = [ONE, LaurentPoly(), ONE]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("Schur polynomials are indexed by n >= 0")
        cache = self._cache
        if n < len(cache):
            return cache[n]
        with self._lock:
            while len(cache) <= n:
                m = len(cache) - 2
                cache.append(cache[m + 1] + cache[m].shift(m))
            return cache[n]

    def __len__(self) -> int:
        return len(self._cache)


_FAMILIES = {Flavor.E: SchurFamily(Flavor.E), Flavor.D: SchurFamily(Flavor.D)}


def schur(flavor, n: int) -> LaurentPoly:
    """``e_n`` or ``d_n`` from the recurrence, with e_0=0, e_1=e_2=1 and d_0=1, d_1=0, d_2=1."""
    return _FAMILIES[_flavor(flavor)][n]


def schur_bosonic(flavor, n: int) -> LaurentPoly:
    """Schur's alternating sum of q-binomials (``n >= 1``)."""
    flavor = _flavor(flavor)
    if n < 1:
        raise ValueError("the alternating-sum form needs n >= 1")
    c = flavor.theta_linear
    shift = 1 if flavor is Flavor.E else 2
    acc = LaurentPoly()
    jmax = (n + 5) // 5 + 1
    for j in range(-jmax, jmax + 1):
        b = q_binomial(n - 1, (n - 5 * j - shift) // 2)
        if b:
            acc = acc + (b.shift(j * (5 * j + c) // 2) * (-1) ** (j % 2))
    return acc


def schur_fermionic(flavor, n: int) -> LaurentPoly:
    """MacMahon's positive form ``sum_r q^(r(r+a)) [n-r-1-a, r]``, a=0 for E, a=1 for D."""
    flavor = _flavor(flavor)
    if n < 1:
        raise ValueError("the positive-sum form needs n >= 1")
    a = 0 if flavor is Flavor.E else 1
    acc = LaurentPoly()
    r = 0
    while 2 * r <= n - 1 - a:
        acc = acc + q_binomial(n - r - 1 - a, r).shift(r * (r + a))
        r += 1
    return acc


def szego(n: int, t: int) -> LaurentPoly:
    """Szego polynomial ``K_n(x) = sum_r x^r q^(r(r+1)) [n, r]`` at ``x = q^t``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = LaurentPoly()
    for r in range(n + 1):
        acc = acc + q_binomial(n, r).shift(r * t + r * (r + 1))
    return acc


def _half(num: int) -> int:
    if num % 2:
        raise ArithmeticError(f"non-integral exponent {num}/2")
    return num // 2


def partial_theta(n: int, k: int, c: int) -> LaurentPoly:
    """``sum_{j=-n-k}^{n} (-1)^j q^(j(5j+c)/2)`` for odd ``c``."""
    return LaurentPoly((_half(j * (5 * j + c)), (-1) ** (j % 2)) for j in range(-n - k, n + 1))


def theorem_rhs(flavor, n: int, k: int) -> LaurentPoly:
    """Weighted Schur sum ``sum_r x_{2r+k+2} (-1)^(n-r) q^((n-r)(5n+3r+4k+5)/2) (q;q)_{n+r+k}/(q;q)_{n-r}``.

    The Pochhammer quotient for index ``r`` is ``prod_{j=n-r+1}^{n+r+k} (1-q^j)``;
    consecutive quotients differ by two binomials, so the sum is evaluated
    Horner-style from ``r = n`` down, one pair of binomial passes per step.
    """
    flavor = _flavor(flavor)
    fam = _FAMILIES[flavor]

    def term(r: int) -> LaurentPoly:
        e = _half((n - r) * (5 * n + 3 * r + 4 * k + 5))
        return fam[2 * r + k + 2].shift(e) * (-1) ** ((n - r) % 2)

    acc = term(n)
    for r in range(n - 1, -1, -1):
        acc = acc.mul_binomial(n - r).mul_binomial(n + r + 1 + k) + term(r)
    if k:
        acc = acc.mul_binomial(n + 1)
    return acc


def theorem_rhs_by_division(flavor, n: int, k: int) -> LaurentPoly:
    """Same sum, term by term, with the Pochhammer quotient from exact division (slow oracle)."""
    fam = _FAMILIES[_flavor(flavor)]
    acc = LaurentPoly()
    for r in range(n + 1):
        quot = (qq(n + r + k)).divexact(qq(n - r))
        e = _half((n - r) * (5 * n + 3 * r + 4 * k + 5))
        acc = acc + (fam[2 * r + k + 2] * quot).shift(e) * (-1) ** ((n - r) % 2)
    return acc


def check_theorem(n: int, k: int, flavors=(Flavor.E, Flavor.D)) -> VerificationReport:
    """Both partial-theta identities at one ``(n, k)``; the report fails on the first that does."""
    flavors = [_flavor(f) for f in flavors]

    def compute():
        if n < 0 or k not in (0, 1):
            raise InvalidInstance("need n >= 0 and k in {0, 1}")
        lhs = [partial_theta(n, k, f.theta_linear) for f in flavors]
        rhs = [theorem_rhs(f, n, k) for f in flavors]
        return lhs, rhs

    params = {"n": n, "k": k}
    if len(flavors) == 1:
        params["i"] = flavors[0].index
    return run_check("thm", params, compute)


def verify_theorem(n_max: int) -> list[VerificationReport]:
    """Partial-theta identities for e (i=2) and d (i=1), ``k in {0,1}``, ``0 <= n <= n_max``."""
    return [check_theorem(n, k, (f,)) for n in range(n_max + 1) for k in (0, 1) for f in (Flavor.E, Flavor.D)]


def rrpoly_sides(n: int, a: int) -> tuple[LaurentPoly, LaurentPoly]:
    lhs = LaurentPoly()
    r = 0
    while 2 * r <= n - a:
        lhs = lhs + q_binomial(n - r - a, r).shift(r * (r + a))
        r += 1
    rhs = LaurentPoly()
    jmax = n // 5 + 2
    for j in range(-jmax, jmax + 1):
        b = q_binomial(n, (n - 5 * j - a) // 2)
        if b:
            rhs = rhs + b.shift(_half(j * (5 * j + 2 * a + 1))) * (-1) ** (j % 2)
    return lhs, rhs


def rrpoly_check(n: int, a: int) -> VerificationReport:
    """Andrews' polynomial Rogers-Ramanujan identity at one ``(n, a)``, ``a in {0,1}``."""

    def compute():
        if n < 0 or a not in (0, 1):
            raise InvalidInstance("need n >= 0 and a in {0, 1}")
        return rrpoly_sides(n, a)

    return run_check("rrpoly", {"n": n, "a": a}, compute)


def verify_rrpoly(n_max: int) -> list[VerificationReport]:
    return [rrpoly_check(n, a) for n in range(n_max + 1) for a in (0, 1)]


@lru_cache(maxsize=4096)
def aj_summand(n: int, r: int, k: int) -> LaurentPoly:
    """``K_r(q^(2n-2r+k-1)) (-1)^(n-r) q^((n-r)(5n-3r+4k+1)/2) (q;q)_{n+k}/(q;q)_{n-r}`` for ``0 <= r <= n``."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    quot = poch_poly(n - r + 1, r + k)
    e = _half((n - r) * (5 * n - 3 * r + 4 * k + 1))
    return (szego(r, 2 * n - 2 * r + k - 1) * quot).shift(e) * (-1) ** ((n - r) % 2)


def aj_rhs(n: int, k: int) -> LaurentPoly:
    """Sum of :func:`aj_summand` over ``r``; the quotients nest, so Horner from ``r = n`` down."""

    def term(r: int) -> LaurentPoly:
        e = _half((n - r) * (5 * n - 3 * r + 4 * k + 1))
        return szego(r, 2 * n - 2 * r + k - 1).shift(e) * (-1) ** ((n - r) % 2)

    acc = term(n)
    for r in range(n - 1, -1, -1):
        acc = acc.mul_binomial(n - r) + term(r)
    if k:
        acc = acc.mul_binomial(n + 1)
    return acc


def aj_check(n: int, k: int) -> VerificationReport:
    """Andrews' Szego-polynomial identity at one ``(n, k)``."""

    def compute():
        if n < 0 or k not in (0, 1):
            raise InvalidInstance("need n >= 0 and k in {0, 1}")
        return partial_theta(n, k, 2 * k + 1), aj_rhs(n, k)

    return run_check("aj", {"n": n, "k": k}, compute)


def verify_aj(n_max: int) -> list[VerificationReport]:
    return [aj_check(n, k) for n in range(n_max + 1) for k in (0, 1)]


def eulerpol_rhs(n: int, k: int) -> LaurentPoly:
    """``sum_r (-1)^(n-r) q^((n-r)(3n+r+2k+3)/2) (q;q)_{n+r+k}/(q;q)_{n-r}``, Horner-style as in :func:`theorem_rhs`."""

    def term(r: int) -> LaurentPoly:
        return LaurentPoly.monomial(_half((n - r) * (3 * n + r + 2 * k + 3)), (-1) ** ((n - r) % 2))

    acc = term(n)
    for r in range(n - 1, -1, -1):
        acc = acc.mul_binomial(n - r).mul_binomial(n + r + 1 + k) + term(r)
    if k:
        acc = acc.mul_binomial(n + 1)
    return acc


def _wslim_numerators(n: int, k: int) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """Numerators of both WSlim sides over ``(q;q)_n`` and ``(q;q)_n (q^(-2n-k);q)_n``, plus the latter's extra factor."""
    # left: sum_j (1 - q^(k+2j)) (q^(k+1);q)_{j-1} (-1)^j q^(3C(j,2) + (k+1)j) / (q;q)_j
    # over (q;q)_n term j carries g_j = (q^(k+1);q)_{j-1} (q^(j+1);q)_{n-j}, and
    # g_{j+1} = g_j (1 - q^(k+j)) / (1 - q^(j+1)) exactly
    lnum = poch_poly(1, n)
    g = poch_poly(2, max(n - 1, 0))
    for j in range(1, n + 1):
        t = g.mul_binomial(k + 2 * j).shift(3 * j * (j - 1) // 2 + (k + 1) * j)
        lnum = lnum + t * (-1) ** (j % 2)
        if j < n:
            g = g.mul_binomial(k + j).div_binomial(j + 1)
    # right: (q^(k+1);q)_{2n} sum_j q^j / ((q;q)_j (q^(-2n-k);q)_j)
    # term j carries (q^(j+1);q)_{n-j} (q^(-2n-k+j);q)_{n-j}
    rnum = LaurentPoly()
    tail = ONE
    for j in range(n, -1, -1):
        rnum = rnum + tail.shift(j)
        tail = tail.mul_binomial(j).mul_binomial(-2 * n - k + j - 1)
    for i in range(2 * n):
        rnum = rnum.mul_binomial(k + 1 + i)
    extra = ONE
    for i in range(n):
        extra = extra.mul_binomial(-2 * n - k + i)
    return lnum, rnum, extra


def wslim_sides(n: int, k: int) -> tuple[RationalFunction, RationalFunction]:
    """Both sides of the limiting Watson-Sears identity at ``a = q^k``.

    The left summand's ``(a;q)_j / (1-a)`` is taken as ``(aq;q)_{j-1}`` (and 1
    at ``j = 0``), its value as a polynomial in ``a``, so ``k = 0`` is allowed.
    """
    lnum, rnum, extra = _wslim_numerators(n, k)
    return RationalFunction(lnum, qq(n)), RationalFunction(rnum, qq(n) * extra)


def _wslim_compare(n: int, k: int):
    """Cross-multiplied WSlim sides; the shared ``(q;q)_n`` cancels, leaving binomial passes only."""
    lnum, rnum, _ = _wslim_numerators(n, k)
    left = lnum
    for i in range(n):
        left = left.mul_binomial(-2 * n - k + i)
    return left, rnum


def eulerpol_check(n: int, k: int) -> VerificationReport:
    """Euler-type partial theta identity at one ``(n, k)``."""

    def compute():
        if n < 0 or k not in (0, 1):
            raise InvalidInstance("need n >= 0 and k in {0, 1}")
        lhs = LaurentPoly((j * (3 * j + 1) // 2, (-1) ** (j % 2)) for j in range(-n - k, n + 1))
        return lhs, eulerpol_rhs(n, k)

    return run_check("eulerpol", {"n": n, "k": k}, compute)


def wslim_check(n: int, k: int) -> VerificationReport:
    """The limiting Watson-Sears form behind :func:`eulerpol_check`."""

    def compute():
        if n < 0 or k not in (0, 1):
            raise InvalidInstance("need n >= 0 and k in {0, 1}")
        return _wslim_compare(n, k)

    return run_check("wslim", {"n": n, "k": k}, compute)


def verify_eulerpol(n_max: int, wslim_max: int | None = None) -> list[VerificationReport]:
    """Euler-type partial theta identity for ``k in {0,1}``, plus the limiting Watson-Sears form it comes from."""
    wslim_max = n_max if wslim_max is None else wslim_max
    out = [eulerpol_check(n, k) for n in range(n_max + 1) for k in (0, 1)]
    out += [wslim_check(n, k) for n in range(wslim_max + 1) for k in (0, 1)]
    return out


def frec_check(n: int, m: int, k: int) -> VerificationReport:
    """Jordan's recurrence for the Szego summands: tail difference at one ``(n, m, k)``, ``0 <= m < n``."""

    def compute():
        if not 0 <= m < n or k not in (0, 1):
            raise InvalidInstance("need 0 <= m < n and k in {0, 1}")
        lhs = LaurentPoly()
        for r in range(m + 1, n + 1):
            lhs = lhs + aj_summand(n, r, k) - aj_summand(n - 1, r - 1, k)
        rhs = RationalFunction(-aj_summand(n, m, k).mul_binomial(m - n), LaurentPoly.binomial(n + k))
        return RationalFunction(lhs), rhs

    return run_check("frec", {"n": n, "m": m, "k": k}, compute)


def frec_telescoped_check(n: int, k: int) -> VerificationReport:
    """Difference of consecutive full sums: the ``m = 0`` tail form and its two-monomial closed form."""

    def compute():
        if n < 1 or k not in (0, 1):
            raise InvalidInstance("need n >= 1 and k in {0, 1}")
        diff = sum((aj_summand(n, r, k) for r in range(n + 1)), LaurentPoly()) - \
            sum((aj_summand(n - 1, r, k) for r in range(n)), LaurentPoly())
        closed = LaurentPoly.monomial(_half(n * (5 * n + 2 * k + 1)), (-1) ** (n % 2)) + \
            LaurentPoly.monomial(_half((n + k) * (5 * (n + k) - 2 * k - 1)), (-1) ** ((n + k) % 2))
        middle = RationalFunction(aj_summand(n, 0, k).mul_binomial(2 * n + k).shift(-n),
                                  LaurentPoly.binomial(n + k))
        return [RationalFunction(diff), RationalFunction(diff)], [middle, RationalFunction(closed)]

    return run_check("frec", {"n": n, "k": k}, compute)


def verify_frec(n_max: int) -> list[VerificationReport]:
    """Jordan's recurrence for the Szego summands and its telescoped consequence."""
    out = []
    for k in (0, 1):
        out += [frec_check(n, m, k) for n in range(1, n_max + 1) for m in range(n)]
        out += [frec_telescoped_check(n, k) for n in range(1, n_max + 1)]
    return out


def coeff_identity_sides(n: int, m: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the ``a^m`` coefficient identity, each multiplied by ``(q;q)_n``."""
    lhs = LaurentPoly()
    for j in range(n + 1):
        inner = q_binomial(j, m - 2 * j) + q_binomial(j, m - 2 * j - 1).shift(4 * j - m + 1)
        if inner.is_zero():
            continue
        e = j * (j - 1) // 2 + j * (4 * j - 2 * m + 1)
        lhs = lhs + (inner * poch_poly(j + 1, n - j)).shift(e) * (-1) ** (j % 2)
    rhs = LaurentPoly()
    for r in range(n + 1):
        for s in range(n - r + 1):
            b1 = q_binomial(2 * n + 1 - r, m - 2 * r - s)
            if b1.is_zero():
                continue
            b2 = q_binomial(2 * n - 2 * r - s + 1, s)
            e = (r + s) * (r + s - 1) // 2 + r * (4 * n - 2 * m + 4) + s * (s + r - m + 1)
            rhs = rhs + (b1 * b2 * poch_poly(r + 1, n - r)).shift(e) * (-1) ** ((r + s) % 2)
    return lhs, rhs


def coeff_check(n: int, m: int) -> VerificationReport:
    def compute():
        if n < 0:
            raise InvalidInstance("need n >= 0")
        return coeff_identity_sides(n, m)

    return run_check("coeff", {"n": n, "m": m}, compute)


def verify_coeff_identity(n_max: int) -> list[VerificationReport]:
    return [coeff_check(n, m) for n in range(n_max + 1) for m in range(3 * n + 2)]


def schur_three_way_check(n: int, i: int) -> VerificationReport:
    """Recurrence, alternating sum and positive sum agree at one ``(n, i)``."""

    def compute():
        if n < 1 or i not in (1, 2):
            raise InvalidInstance("need n >= 1 and i in {1, 2}")
        f = Flavor.E if i == 2 else Flavor.D
        return [schur(f, n), schur(f, n)], [schur_bosonic(f, n), schur_fermionic(f, n)]

    return run_check("schur-three-way", {"n": n, "i": i}, compute)


def verify_schur_three_way(n_max: int, n_min: int = 1) -> list[VerificationReport]:
    return [schur_three_way_check(n, i) for n in range(n_min, n_max + 1) for i in (2, 1)]


def rr_sum(a: int, order: int) -> TruncatedSeries:
    """``sum_n q^(n(n+a)) / (q;q)_n`` through ``q^order`` for ``a >= 0``."""
    if a < 0:
        raise ValueError("rr_sum needs a >= 0")
    acc = TruncatedSeries.zero(order)
    term = TruncatedSeries.one(order)
    n = 0
    while n * (n + a) <= order:
        acc = acc + term.shift(n * (n + a)).truncate(order)
        n += 1
        term = term.div_binomial(n)
    return acc


def rr_check(a: int, order: int) -> VerificationReport:
    """Rogers-Ramanujan ``sum q^(n(n+a))/(q;q)_n = 1/(q^(1+a), q^(4-a); q^5)_oo``, ``a in {0,1}``."""

    def compute():
        if a not in (0, 1):
            raise InvalidInstance("a must be 0 or 1")
        return rr_sum(a, order), inf_product([(1 + a, 5), (4 - a, 5)], order, -1)

    return run_check("rr1" if a == 0 else "rr2", {"a": a}, compute, order)
