import pytest
from hypothesis import given, settings, strategies as st

import oracle as O
from qrr.laurent import LaurentPoly, format_terms
from qrr.qpoch import inf_product, inv_poch_finite, poch_finite, poch_inf, poch_poly, q_binomial, qq
from qrr.rational import RationalFunction
from qrr.series import TruncatedSeries
from qrr.sums import bilateral_range, convex_range

small_polys = st.dictionaries(st.integers(-6, 12), st.integers(-9, 9), max_size=6)


def P(d):
    return LaurentPoly(d)


# ------------------------------------------------------------ LaurentPoly

@given(small_polys, small_polys, small_polys)
@settings(max_examples=80, deadline=None)
def test_ring_laws(a, b, c):
    A, B, C = P(a), P(b), P(c)
    assert A + B == B + A
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A - A == LaurentPoly()
    assert A * 1 == A


@given(small_polys, small_polys)
@settings(max_examples=80, deadline=None)
def test_product_matches_schoolbook(a, b):
    assert (P(a) * P(b)).coeffs == O.pmul(a, b)
    assert (P(a) + P(b)).coeffs == O.padd(a, b)


@given(small_polys, st.integers(-5, 9).filter(lambda e: e != 0))
@settings(max_examples=60, deadline=None)
def test_binomial_pass_roundtrip(a, e):
    A = P(a)
    assert A.mul_binomial(e).coeffs == O.pmul(a, O.binom(e))
    assert A.mul_binomial(e).div_binomial(e) == A


def test_div_binomial_rejects_non_multiples():
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 1: 1}).div_binomial(2)


def test_divexact():
    a = poch_poly(1, 5)
    assert (a * q_binomial(7, 3)).divexact(a) == q_binomial(7, 3)
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 1: 1}).divexact(LaurentPoly({0: 1, 1: -1}))


@pytest.mark.parametrize("pairs, text", [
    ([], "0"),
    ([(0, 1)], "1"),
    ([(0, 1), (2, -1), (3, -1)], "1 - q^2 - q^3"),
    ([(1, 1)], "q"),
    ([(-2, 3), (1, -1), (4, 2)], "3q^-2 - q + 2q^4"),
    ([(0, -1), (1, -5)], "-1 - 5q"),
])
def test_polynomial_printing(pairs, text):
    assert format_terms(pairs) == text
    assert str(LaurentPoly(dict(pairs))) == text


def test_first_mismatch_reports_lowest_exponent():
    a = LaurentPoly({0: 1, 3: 2, 5: 1})
    b = LaurentPoly({0: 1, 3: 1, 5: 2})
    assert a.first_mismatch(b) == (3, 2, 1)
    assert a.first_mismatch(a) is None


def test_evaluation_and_negative_exponents():
    p = LaurentPoly({-1: 2, 0: 1, 2: -1})
    assert p(2) == 2 * 2 ** -1 + 1 - 4
    assert p.low == -1 and p.degree == 2
    assert p.shift(3).low == 2


# ------------------------------------------------------------ TruncatedSeries

unit_series = st.tuples(st.sampled_from([1, -1]), st.dictionaries(st.integers(1, 12), st.integers(-9, 9), max_size=5))


@given(unit_series, st.integers(0, 25))
@settings(max_examples=50, deadline=None)
def test_series_inverse_against_recurrence(u, N):
    a = {0: u[0], **u[1]}
    s = TruncatedSeries.from_poly(P(a), N)
    inv = s.inverse()
    assert inv.to_poly().coeffs == O.series_inverse(a, N)
    assert (s * inv) == TruncatedSeries.one(N)


def test_series_truncation_and_window():
    s = TruncatedSeries.from_poly(LaurentPoly({0: 1, 3: 2, 9: 5}), 6)
    assert s.order == 6
    assert s.to_poly() == LaurentPoly({0: 1, 3: 2})
    assert s.truncate(2).to_poly() == LaurentPoly(1)
    with pytest.raises(ValueError):
        s.truncate(7)
    with pytest.raises(IndexError):
        s[7]


def test_series_products_with_low_valuation_keep_order():
    # q^-2 (1 + q) times q^3 (1 - q): order is set by the factor known least far
    a = TruncatedSeries.from_poly(LaurentPoly({-2: 1, -1: 1}), 10)
    b = TruncatedSeries.from_poly(LaurentPoly({3: 1, 4: -1}), 10)
    c = a * b
    assert c.to_poly() == LaurentPoly({1: 1, 3: -1})
    assert c.order >= 8


def test_series_div_binomial_is_geometric():
    s = TruncatedSeries.one(12).div_binomial(3)
    assert s.to_poly() == LaurentPoly({0: 1, 3: 1, 6: 1, 9: 1, 12: 1})


def test_series_equality_on_common_window():
    a = TruncatedSeries.from_poly(LaurentPoly({0: 1, 5: 1}), 4)
    b = TruncatedSeries.from_poly(LaurentPoly({0: 1}), 10)
    assert a == b
    assert str(TruncatedSeries.zero(3)) == "O(q^4)"


# ------------------------------------------------------------ RationalFunction

def test_rational_equality_by_cross_multiplication():
    a = RationalFunction(LaurentPoly.binomial(2), LaurentPoly.binomial(1))
    b = RationalFunction(LaurentPoly({0: 1, 1: 1}))
    assert a == b
    assert a.to_poly() == LaurentPoly({0: 1, 1: 1})
    assert a + b == 2 * b
    assert (a / b) == RationalFunction(1)
    assert a.first_mismatch(b) is None
    with pytest.raises(ZeroDivisionError):
        RationalFunction(1, 0)


def test_rational_mismatch_after_cross_multiplication():
    a = RationalFunction(LaurentPoly(1), LaurentPoly.binomial(1))
    b = RationalFunction(LaurentPoly(1), LaurentPoly.binomial(2))
    assert a != b
    assert a.first_mismatch(b) == (1, 0, -1)


def test_rational_to_series():
    r = RationalFunction(LaurentPoly(1), qq(3))
    want = O.series_inverse(O.qpoch(1, 3), 15)
    assert r.to_series(15).to_poly().coeffs == want


# ------------------------------------------------------------ Pochhammers

def test_poch_finite_examples():
    assert poch_finite(1, 1, 0) == RationalFunction(1)
    assert poch_finite(1, 1, 2).to_poly() == LaurentPoly({0: 1, 1: -1, 2: -1, 3: 1})
    # 1/(q;q)_{-1} is an exact zero
    assert inv_poch_finite(1, 1, -1).is_zero()
    with pytest.raises(ZeroDivisionError):
        poch_finite(1, 1, -1)


def test_poch_finite_negative_length_identity():
    # (a;q)_{-n} (a q^{-n};q)_n = 1
    for m in (3, 5, 7):
        for n in (1, 2):
            assert poch_finite(m, 1, -n) * poch_finite(m - n, 1, n) == RationalFunction(1)


@pytest.mark.parametrize("m,b,N", [(1, 1, 20), (2, 5, 30), (3, 5, 30), (1, 2, 15), (4, 3, 25)])
def test_poch_inf_against_brute_product(m, b, N):
    assert poch_inf(m, b, N).to_poly().coeffs == O.qinf(m, b, N)
    assert poch_inf(m, b, N, -1).to_poly().coeffs == O.qinf(m, b, N, -1)


def test_poch_inf_examples():
    assert poch_inf(1, 1, 5).to_poly() == LaurentPoly({0: 1, 1: -1, 2: -1, 5: 1})
    assert poch_inf(6, 5, 4).to_poly() == LaurentPoly(1)
    N = 30
    assert (poch_inf(1, 1, N) * poch_inf(1, 1, N).inverse()) == TruncatedSeries.one(N)
    assert poch_inf(0, 1, 10).is_zero()


def test_inf_product_negative_power():
    N = 25
    s = inf_product([(1, 5), (4, 5)], N, -1)
    want = O.series_inverse(O.pmul(O.qinf(1, 5, N), O.qinf(4, 5, N), N), N)
    assert s.to_poly().coeffs == want


def test_q_binomial_examples():
    assert q_binomial(4, 2) == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert q_binomial(3, 0) == LaurentPoly(1)
    assert q_binomial(2, 5).is_zero()
    assert q_binomial(3, -1).is_zero()


@pytest.mark.parametrize("n", range(0, 11))
def test_q_binomial_counts_box_partitions(n):
    for m in range(n + 1):
        assert q_binomial(n, m).coeffs == O.gauss_by_counting(n, m)


def test_qq_matches_naive():
    for n in range(8):
        assert qq(n).coeffs == O.qpoch(1, n)
    with pytest.raises(ValueError):
        qq(-1)


# ------------------------------------------------------------ summation ranges

def test_convex_range_covers_window():
    f = lambda r: r * r - 6 * r
    rs = list(convex_range(f, 10))
    want = [r for r in range(0, 50) if f(r) <= 10]
    assert rs == want


def test_bilateral_range_covers_window():
    f = lambda n: n * (n - 1) // 2 + 3 * n
    got = sorted(bilateral_range(f, 20, centre=0))
    want = [n for n in range(-60, 60) if f(n) <= 20]
    assert got == want
