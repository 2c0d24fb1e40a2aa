"""Quotients of Laurent polynomials, compared by cross-multiplication."""

from __future__ import annotations

from .laurent import LaurentPoly
from .series import TruncatedSeries

__all__ = ["RationalFunction"]


def _poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


class RationalFunction:
    """``num / den`` with no normal form.

    Equality is ``num1 * den2 == num2 * den1``.  Sums over a shared
    denominator skip the cross product, which keeps the Bailey-pair sums
    (whose denominators mostly repeat) from blowing up.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _poly(num), _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        # keep the denominator's leading low coefficient positive and its
        # valuation zero; both are cheap and make repeated denominators match
        if den.low:
            num, den = num.shift(-den.low), den.shift(-den.low)
        if den[0] < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def shift(self, k: int) -> "RationalFunction":
        return RationalFunction(self.num.shift(k), self.den)

    def cancel_binomial(self, e: int) -> "RationalFunction":
        """Divide a factor ``1 - q^e`` out of numerator and denominator when both have it."""
        try:
            return RationalFunction(self.num.div_binomial(e), self.den.div_binomial(e))
        except ArithmeticError:
            return self

    def to_poly(self) -> LaurentPoly:
        """Exact polynomial value; raises ``ArithmeticError`` if it is not one."""
        return self.num.divexact(self.den)

    def to_series(self, order: int) -> TruncatedSeries:
        """Expansion to ``order``; the denominator's lowest coefficient must be +-1."""
        num = TruncatedSeries.from_poly(self.num, order)
        den = TruncatedSeries.from_poly(self.den, order - self.num.low + 2 * abs(self.den.low) + 1)
        return (num * den.inverse()).truncate(order)

    def first_mismatch(self, other) -> tuple[int, int, int] | None:
        """Compare cross products; reports the first differing exponent of ``num1*den2`` vs ``num2*den1``."""
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return self.num.first_mismatch(other.num)
        return (self.num * other.den).first_mismatch(other.num * self.den)

    def __eq__(self, other) -> bool:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"
