"""Exact Laurent polynomials in q over the integers.

Coefficients are Python ints held in a dense numpy object array spanning the
lowest to the highest nonzero exponent.  The polynomials met in practice
(Schur polynomials, q-binomials, Pochhammer products) are dense on their
support, and the vectorised kernels below (multiply or divide by ``1 - q^e``)
carry most of the work.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

__all__ = ["LaurentPoly", "format_terms"]


def _obj(values) -> np.ndarray:
    arr = np.empty(len(values), dtype=object)
    arr[:] = list(values)
    return arr


def _zeros(n: int) -> np.ndarray:
    arr = np.empty(n, dtype=object)
    arr.fill(0)
    return arr


def format_terms(pairs: Iterable[tuple[int, int]]) -> str:
    """Render ``(exponent, coefficient)`` pairs as ``1 - q^2 + 3q^5``.

    Pairs must arrive in ascending exponent order with nonzero coefficients.
    The empty sequence renders as ``0``.
    """
    out: list[str] = []
    for e, c in pairs:
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) if out else "0"


class LaurentPoly:
    """Immutable Laurent polynomial with arbitrary-precision integer coefficients.

    Construct from a mapping ``{exponent: coefficient}`` or from an iterable of
    pairs.  Zero coefficients are dropped, so two polynomials are equal exactly
    when their coefficient maps are.
    """

    __slots__ = ("_low", "_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int | None = None):
        if coeffs is None:
            items: list[tuple[int, int]] = []
        elif isinstance(coeffs, int):
            items = [(0, coeffs)]
        elif isinstance(coeffs, Mapping):
            items = list(coeffs.items())
        else:
            items = list(coeffs)
        acc: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            acc[e] = acc.get(e, 0) + int(c)
        nz = {e: c for e, c in acc.items() if c}
        if not nz:
            self._set(0, _zeros(0))
            return
        low, high = min(nz), max(nz)
        arr = _zeros(high - low + 1)
        for e, c in nz.items():
            arr[e - low] = c
        self._set(low, arr)

    def _set(self, low: int, arr: np.ndarray) -> None:
        arr.flags.writeable = False
        self._low = low
        self._c = arr
        self._hash = None

    @classmethod
    def _wrap(cls, low: int, arr: np.ndarray) -> "LaurentPoly":
        """Adopt ``arr`` (not copied) after trimming zero ends."""
        if len(arr):
            nz = np.flatnonzero(arr != 0)
            if len(nz) == 0:
                arr, low = arr[:0], 0
            elif nz[0] != 0 or nz[-1] != len(arr) - 1:
                low += int(nz[0])
                arr = arr[nz[0]:nz[-1] + 1]
        else:
            low = 0
        obj = cls.__new__(cls)
        obj._set(low, arr if arr.base is None else arr.copy())
        return obj

    @classmethod
    def from_dense(cls, low: int, coeffs: Iterable[int]) -> "LaurentPoly":
        """Polynomial ``sum_i coeffs[i] q^(low+i)``."""
        return cls._wrap(low, _obj(coeffs))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        if not coeff:
            return cls()
        return cls._wrap(exponent, _obj([coeff]))

    @classmethod
    def binomial(cls, exponent: int, coeff: int = -1) -> "LaurentPoly":
        """``1 + coeff * q^exponent``; the default is ``1 - q^exponent``."""
        return cls({0: 1}) + cls.monomial(exponent, coeff)

    # ---------------------------------------------------------------- access

    @property
    def low(self) -> int:
        """Lowest exponent with nonzero coefficient (0 for the zero polynomial)."""
        return self._low

    @property
    def valuation(self) -> int:
        return self._low

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial by convention."""
        return self._low + len(self._c) - 1 if len(self._c) else -1

    @property
    def coeffs(self) -> dict[int, int]:
        """Canonical ``{exponent: coefficient}`` map with no zero entries."""
        return {self._low + i: int(c) for i, c in enumerate(self._c) if c}

    def dense(self) -> tuple[int, tuple[int, ...]]:
        """``(low, coefficients)`` including interior zeros."""
        return self._low, tuple(int(c) for c in self._c)

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __getitem__(self, e: int) -> int:
        i = e - self._low
        if 0 <= i < len(self._c):
            return int(self._c[i])
        return 0

    def __len__(self) -> int:
        """Number of nonzero terms."""
        return int(np.count_nonzero(self._c != 0)) if len(self._c) else 0

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def __bool__(self) -> bool:
        return len(self._c) != 0

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __call__(self, x):
        """Evaluate at a number ``x``; negative exponents need ``x`` invertible."""
        total = 0
        for e, c in self.terms():
            total += c * x**e
        return total

    # ------------------------------------------------------------ arithmetic

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, np.integer)):
            return LaurentPoly({0: int(other)})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._c.size:
            return self
        if not self._c.size:
            return other
        low = min(self._low, other._low)
        high = max(self.degree, other.degree)
        arr = _zeros(high - low + 1)
        a = self._low - low
        arr[a:a + len(self._c)] = self._c
        b = other._low - low
        arr[b:b + len(other._c)] += other._c
        return LaurentPoly._wrap(low, arr)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap(self._low, -self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            if not other:
                return LaurentPoly()
            return LaurentPoly._wrap(self._low, self._c * int(other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c.size or not other._c.size:
            return LaurentPoly()
        a, b = self, other
        if len(a) > len(b):
            a, b = b, a
        low = a._low + b._low
        if len(a) <= 16:
            # sparse factor: accumulate shifted copies of the dense one
            arr = _zeros(len(a._c) + len(b._c) - 1)
            for i in np.flatnonzero(a._c != 0):
                c = a._c[i]
                seg = b._c if c == 1 else (-b._c if c == -1 else b._c * c)
                arr[i:i + len(b._c)] += seg
            return LaurentPoly._wrap(low, arr)
        return LaurentPoly._wrap(low, np.convolve(a._c, b._c))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if self.is_monomial() and self._c[0] in (1, -1):
                return LaurentPoly.monomial(-self._low * -n, int(self._c[0]) ** -n)
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        if not self._c.size or k == 0:
            return self
        return LaurentPoly._wrap(self._low + k, self._c)

    def mul_binomial(self, e: int, coeff: int = -1) -> "LaurentPoly":
        """Multiply by ``1 + coeff * q^e`` in one vectorised pass."""
        if not self._c.size or coeff == 0:
            return self
        n = len(self._c)
        if e == 0:
            return self * (1 + coeff)
        if e > 0:
            arr = _zeros(n + e)
            arr[:n] = self._c
            arr[e:] += self._c if coeff == 1 else (-self._c if coeff == -1 else self._c * coeff)
            return LaurentPoly._wrap(self._low, arr)
        d = -e
        arr = _zeros(n + d)
        arr[d:] = self._c
        arr[:n] += self._c if coeff == 1 else (-self._c if coeff == -1 else self._c * coeff)
        return LaurentPoly._wrap(self._low - d, arr)

    def div_binomial(self, e: int) -> "LaurentPoly":
        """Exact quotient by ``1 - q^e``.

        Raises ``ArithmeticError`` if the division leaves a remainder.
        """
        if e == 0:
            raise ZeroDivisionError("division by 1 - q^0")
        if not self._c.size:
            return self
        if e < 0:
            # 1 - q^e = -q^e (1 - q^-e)
            return (-self).div_binomial(-e).shift(-e)
        n = len(self._c)
        if n <= e:
            raise ArithmeticError(f"not divisible by 1 - q^{e}")
        pad = (-n) % e
        arr = _zeros(n + pad)
        arr[:n] = self._c
        block = arr.reshape(-1, e)
        np.cumsum(block, axis=0, out=block)
        if any(arr[n - e:]):
            raise ArithmeticError(f"not divisible by 1 - q^{e}")
        return LaurentPoly._wrap(self._low, arr[:n - e].copy())

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` otherwise."""
        other = self._coerce(other)
        if other is None or not other._c.size:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c.size:
            return self
        if other.is_monomial():
            c = int(other._c[0])
            q, r = np.divmod(self._c, c) if c not in (1, -1) else (self._c * c, None)
            if r is not None and any(r):
                raise ArithmeticError("inexact division")
            return LaurentPoly._wrap(self._low - other._low, np.asarray(q, dtype=object))
        num = self._c.copy()
        den = other._c
        lead = den[-1]
        m = len(den)
        if len(num) < m:
            raise ArithmeticError("inexact division")
        quot = _zeros(len(num) - m + 1)
        for i in range(len(quot) - 1, -1, -1):
            top = num[i + m - 1]
            if top:
                qc, rem = divmod(top, lead)
                if rem:
                    raise ArithmeticError("inexact division")
                quot[i] = qc
                num[i:i + m] -= den * qc
        if any(num):
            raise ArithmeticError("inexact division")
        return LaurentPoly._wrap(self._low - other._low, quot)

    def scale_exponents(self, k: int) -> "LaurentPoly":
        """Substitute ``q -> q^k`` for a positive integer ``k``."""
        if k <= 0:
            raise ValueError("scale factor must be positive")
        if k == 1 or not self._c.size:
            return self
        arr = _zeros((len(self._c) - 1) * k + 1)
        arr[::k] = self._c
        return LaurentPoly._wrap(self._low * k, arr)

    # ----------------------------------------------------------- comparison

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self._low == other._low and len(self._c) == len(other._c)
                and bool(np.all(self._c == other._c)))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._low, tuple(self._c)))
        return self._hash

    def first_mismatch(self, other: "LaurentPoly") -> tuple[int, int, int] | None:
        """Lowest exponent where the two polynomials differ, with both coefficients."""
        diff = self - other
        if diff.is_zero():
            return None
        e = diff.low
        return e, self[e], other[e]

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"

    def __str__(self) -> str:
        return format_terms(self.terms())
