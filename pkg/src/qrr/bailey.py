"""Bailey pairs relative to ``a = q^kappa`` and the terminating summations around them."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .laurent import LaurentPoly
from .qpoch import ONE, poch_poly, qq
from .rational import RationalFunction
from .report import InvalidInstance, VerificationReport, run_check
from .schur import Flavor, partial_theta, schur

__all__ = [
    "BaileyPair",
    "bailey_forward",
    "bailey_inverse",
    "rogers_alpha",
    "rogers_beta",
    "rogers_pair_check",
    "qcv_sides",
    "qcv_check",
    "ws_admissible",
    "ws_sides",
    "ws_check",
    "admissible_ws_tuples",
    "theorem_inversion_check",
    "random_rational_sequence",
    "bailey_roundtrip_check",
]


def _rat(x) -> RationalFunction:
    return RationalFunction.coerce(x)


def _group_sum(terms) -> RationalFunction:
    """Sum rationals, adding numerators over each distinct denominator first."""
    groups: list[list] = []
    for t in terms:
        for g in groups:
            if g[0] == t.den:
                g[1] = g[1] + t.num
                break
        else:
            groups.append([t.den, t.num])
    acc = RationalFunction(0)
    for den, num in groups:
        acc = acc + RationalFunction(num, den)
    return acc


def bailey_forward(alpha: Sequence, kappa: int, L: int) -> list[RationalFunction]:
    """``beta_n = sum_{r<=n} alpha_r / ((q;q)_{n-r} (q^(kappa+1);q)_{n+r})`` for ``n < L``.

    Each term is brought over ``(q;q)_n (q^(kappa+1);q)_{2n}``, so terms whose
    ``alpha_r`` share a denominator add without cross products.
    """
    if len(alpha) < L:
        raise ValueError("alpha is shorter than L")
    alpha = [_rat(a) for a in alpha[:L]]
    out = []
    for n in range(L):
        den = qq(n) * poch_poly(kappa + 1, 2 * n)
        terms = []
        for r in range(n + 1):
            cof = poch_poly(n - r + 1, r) * poch_poly(kappa + 1 + n + r, n - r)
            terms.append(RationalFunction(alpha[r].num * cof, alpha[r].den * den))
        out.append(_group_sum(terms))
    return out


def bailey_inverse(beta: Sequence, kappa: int, L: int) -> list[RationalFunction]:
    """``alpha_n = (1 - q^(kappa+2n)) sum_r (-1)^(n-r) q^C(n-r,2) (q^(kappa+1);q)_{n+r-1} / (q;q)_{n-r} beta_r``.

    At ``n = 0`` the factor ``(1 - a)(aq;q)_{-1}`` is 1 for every ``a``
    (including ``a = 1`` as a limit), so ``alpha_0 = beta_0``.
    """
    if len(beta) < L:
        raise ValueError("beta is shorter than L")
    beta = [_rat(b) for b in beta[:L]]
    out = []
    for n in range(L):
        if n == 0:
            out.append(beta[0])
            continue
        terms = []
        for r in range(n + 1):
            cof = poch_poly(kappa + 1, n + r - 1) * poch_poly(n - r + 1, r)
            cof = cof.shift((n - r) * (n - r - 1) // 2) * (-1) ** ((n - r) % 2)
            terms.append(RationalFunction(beta[r].num * cof, beta[r].den))
        s = _group_sum(terms)
        pre = LaurentPoly.binomial(kappa + 2 * n)
        out.append(RationalFunction(s.num * pre, s.den * qq(n)))
    return out


@dataclass
class BaileyPair:
    """Sequences ``alpha``, ``beta`` relative to ``a = q^kappa``."""

    kappa: int
    alpha: list
    beta: list

    @property
    def length(self) -> int:
        return min(len(self.alpha), len(self.beta))

    @classmethod
    def from_alpha(cls, alpha, kappa: int) -> "BaileyPair":
        return cls(kappa, [_rat(a) for a in alpha], bailey_forward(alpha, kappa, len(alpha)))

    @classmethod
    def from_beta(cls, beta, kappa: int) -> "BaileyPair":
        return cls(kappa, bailey_inverse(beta, kappa, len(beta)), [_rat(b) for b in beta])

    def check(self, family: str = "bailey-pair") -> VerificationReport:
        L = self.length
        return run_check(family, {"kappa": self.kappa, "L": L},
                         lambda: (bailey_forward(self.alpha, self.kappa, L), [_rat(b) for b in self.beta[:L]]))


def rogers_alpha(n: int) -> LaurentPoly:
    """``(-1)^n q^(n(3n+1)/2) (1 - q^(2n+1)) / (1 - q)``."""
    geo = LaurentPoly.from_dense(0, [1] * (2 * n + 1))
    return geo.shift(n * (3 * n + 1) // 2) * (-1) ** (n % 2)


def rogers_beta(n: int) -> RationalFunction:
    return RationalFunction(ONE, qq(n))


def rogers_pair_check(L: int) -> VerificationReport:
    """Rogers' pair relative to ``q`` satisfies the forward relation for ``n < L``."""
    return BaileyPair(1, [rogers_alpha(n) for n in range(L)], [rogers_beta(n) for n in range(L)]).check("rogers")


def _pochs(m: int, j: int) -> LaurentPoly:
    return poch_poly(m, j)


def qcv_sides(n: int, A: int, C: int | None) -> tuple[RationalFunction, RationalFunction]:
    """q-Chu-Vandermonde with ``a = q^A`` and ``c = q^C`` (``C=None`` for ``c = 0``).

    Both sides come over the same denominator ``(q;q)_n (c;q)_n``.
    """
    if n < 0:
        raise InvalidInstance("n must be nonnegative")
    if C is not None and -n < C <= 0:
        raise InvalidInstance(f"(c;q)_j vanishes for c = q^{C}")
    cpoch = (lambda m, j: _pochs(m, j)) if C is not None else (lambda m, j: ONE)
    cexp = C if C is not None else 0
    num = LaurentPoly()
    for j in range(n + 1):
        t = _pochs(A, j) * _pochs(-n, j)
        t = t * _pochs(j + 1, n - j) * cpoch(cexp + j, n - j)
        num = num + t.shift(j)
    den = qq(n) * cpoch(cexp, n)
    if C is None:
        rnum = qq(n).shift(A * n)
    else:
        rnum = (_pochs(C - A, n) * qq(n)).shift(A * n)
    return RationalFunction(num, den), RationalFunction(rnum, den)


def qcv_check(n: int, A: int, C: int | None) -> VerificationReport:
    params = {"n": n, "A": A}
    if C is not None:
        params["C"] = C
    return run_check("qcv", params, lambda: qcv_sides(n, A, C))


def _ws_exponents(n, A, B, C, D, E):
    """Exponents of every Pochhammer that appears in a denominator of either side, with its length."""
    return [
        # left: (q, aq/b, aq/c, aq/d, aq/e, aq^(n+1); q)_j, j <= n
        (1, n), (A + 1 - B, n), (A + 1 - C, n), (A + 1 - D, n), (A + 1 - E, n), (A + n + 1, n),
        # right prefactor: (aq/c, aq/d, aq/e; q)_n
        (A + 1 - C, n), (A + 1 - D, n), (A + 1 - E, n),
        # right 4phi3: (q, aq/b, a^2 q^2/bcde, q^(1-n)/b; q)_j
        (A + 1 - B, n), (2 * A + 2 - B - C - D - E, n), (1 - n - B, n),
    ]


def ws_admissible(n: int, A: int, B: int, C: int, D: int, E: int) -> bool:
    """True when no denominator factor ``1 - q^0`` occurs on either side."""
    return all(not (m <= 0 < m + length) for m, length in _ws_exponents(n, A, B, C, D, E))


def ws_sides(n: int, A: int, B: int, C: int, D: int, E: int) -> tuple[RationalFunction, RationalFunction]:
    """Terminating very-well-poised 8W7 (left) and the balanced 4phi3 form (right).

    ``(1 - a q^(2j)) (a;q)_j / (1 - a)`` is evaluated as ``(1 - a q^(2j)) (aq;q)_{j-1}``,
    which is also the right value at ``a = 1``.
    """
    if n < 0:
        raise InvalidInstance("n must be nonnegative")
    if not ws_admissible(n, A, B, C, D, E):
        raise InvalidInstance("a denominator factor vanishes at these exponents")
    z = 2 * A + n + 2 - B - C - D - E
    left = []
    for j in range(n + 1):
        wp = ONE if j == 0 else _pochs(A + 1, j - 1).mul_binomial(A + 2 * j)
        num = wp * _pochs(B, j) * _pochs(C, j) * _pochs(D, j) * _pochs(E, j) * _pochs(-n, j)
        den = qq(j) * _pochs(A + 1 - B, j) * _pochs(A + 1 - C, j) * _pochs(A + 1 - D, j) \
            * _pochs(A + 1 - E, j) * _pochs(A + n + 1, j)
        left.append(RationalFunction(num.shift(z * j), den))
    right = []
    for j in range(n + 1):
        num = _pochs(A + 1 - B - C, j) * _pochs(A + 1 - B - D, j) * _pochs(A + 1 - B - E, j) * _pochs(-n, j)
        den = qq(j) * _pochs(A + 1 - B, j) * _pochs(2 * A + 2 - B - C - D - E, j) * _pochs(1 - n - B, j)
        right.append(RationalFunction(num.shift(j), den))
    pre = RationalFunction(
        _pochs(A + 1, n) * _pochs(B, n) * _pochs(2 * A + 2 - B - C - D - E, n),
        _pochs(A + 1 - C, n) * _pochs(A + 1 - D, n) * _pochs(A + 1 - E, n),
    )
    return _group_sum(left), pre * _group_sum(right)


def ws_check(n: int, A: int, B: int, C: int, D: int, E: int) -> VerificationReport:
    return run_check("ws", {"n": n, "A": A, "B": B, "C": C, "D": D, "E": E},
                     lambda: ws_sides(n, A, B, C, D, E))


def admissible_ws_tuples(n: int, count: int, lo: int = 1, hi: int = 4):
    """First ``count`` admissible ``(A, B, C, D, E)`` in lexicographic order over ``[lo, hi]^5``."""
    out = []
    for t in itertools.product(range(lo, hi + 1), repeat=5):
        if ws_admissible(n, *t):
            out.append(t)
            if len(out) == count:
                break
    return out


def theorem_inversion_check(m_max: int) -> list[VerificationReport]:
    """Invert the Schur representation as a Bailey pair relative to ``q^(k+1)``.

    ``beta_m = q^(-C(2m+k+2,2)) (q;q)_{k+1} x_{2m+k+2}`` should map to
    ``alpha_r = q^(-C(2r+k+2,2)) (1 - q^(2r+k+1))`` times the partial theta sum.
    """
    out = []
    for k in (0, 1):
        for f in (Flavor.E, Flavor.D):
            def compute(k=k, f=f):
                beta = [RationalFunction((schur(f, 2 * m + k + 2) * qq(k + 1))
                                         .shift(-(2 * m + k + 2) * (2 * m + k + 1) // 2)) for m in range(m_max + 1)]
                alpha = bailey_inverse(beta, k + 1, m_max + 1)
                want = [RationalFunction(partial_theta(r, k, f.theta_linear).mul_binomial(2 * r + k + 1)
                                         .shift(-(2 * r + k + 2) * (2 * r + k + 1) // 2))
                        for r in range(m_max + 1)]
                return alpha, want
            out.append(run_check("thm-inversion", {"m_max": m_max, "k": k, "i": f.index}, compute))
    return out


def random_rational_sequence(rng: random.Random, length: int) -> list[RationalFunction]:
    """Short random Laurent numerators, each over a single ``1 - q^e`` with ``e <= 3``.

    Keeping the denominators in a small pool lets the transforms group terms;
    arbitrary products make the cross-multiplied sums grow quickly.
    """
    out = []
    for _ in range(length):
        low = rng.randint(-3, 3)
        num = LaurentPoly.from_dense(low, [rng.randint(-5, 5) for _ in range(rng.randint(1, 5))])
        den = LaurentPoly.binomial(rng.randint(1, 3))
        out.append(RationalFunction(num, den))
    return out


def bailey_roundtrip_check(seed: int, kappa: int, length: int = 8) -> VerificationReport:
    """``inverse(forward(alpha)) = alpha`` and ``forward(inverse(beta)) = beta`` for seeded random sequences."""

    def compute():
        if length < 0:
            raise InvalidInstance("length must be nonnegative")
        rng = random.Random(seed * 1000003 + kappa)
        alpha = random_rational_sequence(rng, length)
        beta = random_rational_sequence(rng, length)
        there = bailey_inverse(bailey_forward(alpha, kappa, length), kappa, length)
        back = bailey_forward(bailey_inverse(beta, kappa, length), kappa, length)
        return there + back, alpha + beta

    return run_check("bailey-roundtrip", {"seed": seed, "kappa": kappa, "L": length}, compute)
