"""Truncated Laurent series with exact integer coefficients.

A series knows its coefficients exactly for every exponent ``<= order``.
Precision is tracked the usual way: a product keeps only what both factors
determine, so a series with negative valuation costs precision when it
multiplies another.  Comparisons only look at the common window.
"""

from __future__ import annotations

import numpy as np

from .laurent import LaurentPoly, _obj, _zeros, format_terms

__all__ = ["TruncatedSeries"]


class TruncatedSeries:
    """Series ``sum_{start <= e <= order} c_e q^e + O(q^(order+1))``.

    The stored window is trimmed on the left, so ``valuation`` is the first
    nonzero exponent, or ``order + 1`` for a series that vanishes on its
    window.
    """

    __slots__ = ("_start", "_c", "_order")

    def __init__(self, start: int, coeffs, order: int):
        arr = coeffs if isinstance(coeffs, np.ndarray) and coeffs.dtype == object else _obj(coeffs)
        self._init(start, arr, order)

    def _init(self, start: int, arr: np.ndarray, order: int) -> None:
        keep = order - start + 1
        if keep <= 0:
            start, arr = order + 1, arr[:0]
        elif len(arr) > keep:
            arr = arr[:keep]
        elif len(arr) < keep:
            full = _zeros(keep)
            full[:len(arr)] = arr
            arr = full
        if len(arr):
            nz = np.flatnonzero(arr != 0)
            if len(nz) == 0:
                start, arr = order + 1, arr[:0]
            elif nz[0]:
                start += int(nz[0])
                arr = arr[nz[0]:]
        arr = arr.copy() if arr.base is not None else arr
        arr.flags.writeable = False
        self._start = start
        self._c = arr
        self._order = order

    @classmethod
    def _wrap(cls, start: int, arr: np.ndarray, order: int) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj._init(start, arr, order)
        return obj

    @classmethod
    def from_poly(cls, p: LaurentPoly | int, order: int) -> "TruncatedSeries":
        if isinstance(p, int):
            p = LaurentPoly(p)
        if p.is_zero():
            return cls.zero(order)
        low, coeffs = p.dense()
        return cls._wrap(low, _obj(coeffs), order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls._wrap(order + 1, _zeros(0), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_poly(LaurentPoly(1), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        return cls.from_poly(LaurentPoly.monomial(exponent, coeff), order)

    # ---------------------------------------------------------------- access

    @property
    def order(self) -> int:
        return self._order

    @property
    def valuation(self) -> int:
        return self._start

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def __getitem__(self, e: int) -> int:
        if e > self._order:
            raise IndexError(f"exponent {e} beyond order {self._order}")
        i = e - self._start
        return int(self._c[i]) if 0 <= i < len(self._c) else 0

    def coefficients(self, lo: int | None = None) -> list[int]:
        """Coefficients for exponents ``lo..order`` (``lo`` defaults to the valuation)."""
        lo = self._start if lo is None else lo
        return [self[e] for e in range(lo, self._order + 1)]

    def to_poly(self) -> LaurentPoly:
        """The known part as an exact polynomial (drops the O-term)."""
        return LaurentPoly.from_dense(self._start, self._c)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self._order:
            raise ValueError(f"cannot extend order {self._order} to {order}")
        return TruncatedSeries._wrap(self._start, self._c, order)

    # ------------------------------------------------------------ arithmetic

    def _align(self, other: "TruncatedSeries"):
        order = min(self._order, other._order)
        lo = min(self._start, other._start)
        n = max(order - lo + 1, 0)
        a, b = _zeros(n), _zeros(n)
        for arr, s in ((a, self), (b, other)):
            off = s._start - lo
            m = min(len(s._c), n - off)
            if m > 0:
                arr[off:off + m] = s._c[:m]
        return lo, a, b, order

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (LaurentPoly, int, np.integer)):
            return TruncatedSeries.from_poly(LaurentPoly(int(other)) if not isinstance(other, LaurentPoly) else other,
                                             self._order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        lo, a, b, order = self._align(other)
        return TruncatedSeries._wrap(lo, a + b, order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._wrap(self._start, -self._c, self._order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        lo, a, b, order = self._align(other)
        return TruncatedSeries._wrap(lo, a - b, order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return TruncatedSeries._wrap(self._start, self._c * int(other), self._order)
        if isinstance(other, LaurentPoly):
            if other.is_zero():
                return TruncatedSeries.zero(self._order)
            order = self._order + other.low
            low, coeffs = other.dense()
            start = self._start + low
            keep = order - start + 1
            if keep <= 0 or not len(self._c):
                return TruncatedSeries.zero(order)
            prod = np.convolve(self._c[:keep], _obj(coeffs[:keep]))
            return TruncatedSeries._wrap(start, prod, order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self._order + other._start, other._order + self._start)
        start = self._start + other._start
        keep = order - start + 1
        if keep <= 0 or not len(self._c) or not len(other._c):
            return TruncatedSeries.zero(order)
        prod = np.convolve(self._c[:keep], other._c[:keep])
        return TruncatedSeries._wrap(start, prod, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return TruncatedSeries.one(self._order)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q^k``; the order moves with it."""
        return TruncatedSeries._wrap(self._start + k, self._c, self._order + k)

    def mul_binomial(self, e: int, coeff: int = -1) -> "TruncatedSeries":
        """Multiply by ``1 + coeff * q^e`` for ``e >= 0`` without losing precision."""
        if e < 0:
            return self * LaurentPoly.binomial(e, coeff)
        if e == 0:
            return self * (1 + coeff)
        c = self._c
        arr = c.copy()
        if e < len(c):
            arr[e:] += c[:len(c) - e] * coeff
        return TruncatedSeries._wrap(self._start, arr, self._order)

    def div_binomial(self, e: int) -> "TruncatedSeries":
        """Divide by ``1 - q^e``.  For ``e > 0`` this is a unit and precision is kept."""
        if e == 0:
            raise ZeroDivisionError("division by 1 - q^0")
        if e < 0:
            return (-self).div_binomial(-e).shift(-e)
        n = len(self._c)
        if not n:
            return self
        pad = (-n) % e
        arr = _zeros(n + pad)
        arr[:n] = self._c
        block = arr.reshape(-1, e)
        np.cumsum(block, axis=0, out=block)
        return TruncatedSeries._wrap(self._start, arr[:n], self._order)

    def inverse(self) -> "TruncatedSeries":
        """Reciprocal of a series whose leading coefficient is +1 or -1."""
        if not len(self._c):
            raise ZeroDivisionError("series vanishes on its window")
        lead = int(self._c[0])
        if lead not in (1, -1):
            raise ArithmeticError(f"leading coefficient {lead} is not a unit")
        v = self._start
        m = self._order - v
        a = self._c
        b = _zeros(m + 1)
        b[0] = lead
        for n in range(1, m + 1):
            k = min(n, len(a) - 1)
            if k:
                s = np.dot(a[1:k + 1], b[n - 1:n - k - 1:-1] if n - k - 1 >= 0 else b[n - 1::-1])
                b[n] = -lead * s
        return TruncatedSeries._wrap(-v, b, self._order - 2 * v)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            other = TruncatedSeries.from_poly(other, self._order - self._start + 2 * abs(other.low))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.inverse()

    # ----------------------------------------------------------- comparison

    def first_mismatch(self, other) -> tuple[int, int, int] | None:
        """Lowest exponent on the common window where the series differ."""
        other = self._coerce(other)
        lo, a, b, order = self._align(other)
        diff = np.flatnonzero(a != b)
        if len(diff) == 0:
            return None
        i = int(diff[0])
        return lo + i, int(a[i]), int(b[i])

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._start}, {list(map(int, self._c))!r}, order={self._order})"

    def __str__(self) -> str:
        body = format_terms((self._start + i, int(c)) for i, c in enumerate(self._c) if c)
        tail = f"O(q^{self._order + 1})"
        return tail if body == "0" else f"{body} + {tail}"
