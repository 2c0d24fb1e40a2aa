"""Classical q-series identities checked on a truncation window.

Each check specialises the free argument to ``a = sign * q^s`` so both sides
are single-variable series with integer coefficients.
"""

from __future__ import annotations

from .qpoch import inf_product, poch_inf
from .report import InvalidInstance, VerificationReport, run_check
from .series import TruncatedSeries
from .sums import bilateral_range, monomial_sum, product_to_order

__all__ = [
    "theta_series",
    "euler_exp_series",
    "jacobi_cube_lhs",
    "triple_product_check",
    "euler_qexp_check",
    "jacobi_cube_check",
]


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise InvalidInstance("sign must be +1 or -1")


def theta_series(s: int, sign: int, order: int) -> TruncatedSeries:
    """``sum_n (-1)^n a^n q^C(n,2)`` at ``a = sign*q^s``."""
    f = lambda n: s * n + n * (n - 1) // 2
    ns = bilateral_range(f, order, centre=max(0, -s))
    return monomial_sum(((f(n), (-sign) ** (n % 2)) for n in ns), order)


def euler_exp_series(s: int, sign: int, order: int) -> TruncatedSeries:
    """``sum_n (-1)^n a^n q^C(n,2) / (q;q)_n`` at ``a = sign*q^s`` with ``s >= 1``."""
    total = TruncatedSeries.zero(order)
    term = TruncatedSeries.one(order)
    n = 0
    while s * n + n * (n - 1) // 2 <= order:
        total = total + term
        n += 1
        # term_n = term_{n-1} * (-a q^(n-1)) / (1 - q^n)
        term = (term.shift(s + n - 1) * -sign).truncate(order).div_binomial(n)
    return total


def jacobi_cube_lhs(order: int) -> TruncatedSeries:
    """``sum_{i>=0} (-1)^i (2i+1) q^C(i+1,2)``."""
    terms = []
    i = 0
    while i * (i + 1) // 2 <= order:
        terms.append((i * (i + 1) // 2, (-1) ** i * (2 * i + 1)))
        i += 1
    return monomial_sum(terms, order)


def triple_product_check(s: int, sign: int, order: int) -> VerificationReport:
    """Jacobi triple product ``sum (-1)^n a^n q^C(n,2) = (a, q/a, q; q)_oo`` at ``a = sign*q^s``."""

    def compute():
        _check_sign(sign)
        lhs = theta_series(s, sign, order)
        rhs = product_to_order([
            lambda N: poch_inf(s, 1, N, sign),
            lambda N: poch_inf(1 - s, 1, N, sign),
            lambda N: poch_inf(1, 1, N),
        ], order)
        return lhs, rhs

    return run_check("tpi", {"s": s, "sign": sign}, compute, order)


def euler_qexp_check(s: int, sign: int, order: int) -> VerificationReport:
    """Euler's exponential ``sum (-1)^n a^n q^C(n,2)/(q;q)_n = (a;q)_oo`` at ``a = sign*q^s``."""

    def compute():
        _check_sign(sign)
        if s < 1:
            raise InvalidInstance("Euler's q-exponential check needs s >= 1")
        return euler_exp_series(s, sign, order), poch_inf(s, 1, order, sign)

    return run_check("euler-exp", {"s": s, "sign": sign}, compute, order)


def jacobi_cube_check(order: int) -> VerificationReport:
    """``sum (-1)^i (2i+1) q^C(i+1,2) = (q;q)_oo^3``."""
    return run_check("jacobi-cube", {}, lambda: (jacobi_cube_lhs(order), inf_product([(1, 1)], order, 3)),
                     order)
