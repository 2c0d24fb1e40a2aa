"""Verification reports and the side-by-side comparison used by every check."""

from __future__ import annotations

import contextlib
import contextvars
import time
from dataclasses import dataclass, field
from typing import Any, Callable, NamedTuple

from .laurent import LaurentPoly
from .rational import RationalFunction
from .series import TruncatedSeries

__all__ = [
    "Mismatch",
    "VerificationReport",
    "InvalidInstance",
    "compare",
    "run_check",
    "corrupting",
]

PASS, FAIL, INVALID = "pass", "fail", "invalid"


class InvalidInstance(ValueError):
    """Parameters outside an identity's domain (not a mismatch)."""


class Mismatch(NamedTuple):
    exponent: int
    lhs: int
    rhs: int


@dataclass
class VerificationReport:
    family: str
    params: dict[str, int]
    status: str
    order: int | None = None
    mismatch: Mismatch | None = None
    elapsed_ms: float = 0.0
    note: str = field(default="", compare=False)

    def __post_init__(self):
        if (self.status == FAIL) != (self.mismatch is not None):
            raise ValueError("a failing report needs a mismatch and only a failing one")

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict[str, Any]:
        mm = None
        if self.mismatch is not None:
            mm = {"exponent": self.mismatch.exponent, "lhs": self.mismatch.lhs, "rhs": self.mismatch.rhs}
        return {
            "family": self.family,
            "params": dict(self.params),
            "order": self.order,
            "status": self.status,
            "mismatch": mm,
            "elapsed_ms": round(self.elapsed_ms),
        }


# Self-test mode: when set, the next comparison shifts one exponent of the
# left side so the harness can prove it detects a wrong identity.
_corrupt: contextvars.ContextVar[bool] = contextvars.ContextVar("qrr_corrupt", default=False)


@contextlib.contextmanager
def corrupting(active: bool = True):
    token = _corrupt.set(active)
    try:
        yield
    finally:
        _corrupt.reset(token)


def _corrupt_side(x):
    if isinstance(x, int):
        x = LaurentPoly(x)
    if isinstance(x, LaurentPoly):
        if x.is_zero():
            return LaurentPoly(1)
        e = x.low
        c = x[e]
        return x - LaurentPoly.monomial(e, c) + LaurentPoly.monomial(e + 1, c)
    if isinstance(x, TruncatedSeries):
        if x.is_zero():
            return x + TruncatedSeries.monomial(min(0, x.order), x.order)
        e = x.valuation
        c = x[e]
        bump = LaurentPoly.monomial(e + 1, c) - LaurentPoly.monomial(e, c)
        return x + TruncatedSeries.from_poly(bump, x.order)
    if isinstance(x, RationalFunction):
        return RationalFunction(_corrupt_side(x.num), x.den)
    if isinstance(x, (list, tuple)):
        return [_corrupt_side(x[0]), *x[1:]] if x else [LaurentPoly(1)]
    raise TypeError(f"cannot corrupt {type(x).__name__}")


def compare(lhs, rhs) -> Mismatch | None:
    """First point of disagreement between two computed sides, or ``None``.

    Polynomials and series report the lowest differing exponent; rational
    functions compare cross products; sequences compare elementwise and
    report the index as the exponent when the elements are plain integers.
    """
    if isinstance(lhs, (list, tuple)) or isinstance(rhs, (list, tuple)):
        if len(lhs) != len(rhs):
            return Mismatch(min(len(lhs), len(rhs)), len(lhs), len(rhs))
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            if isinstance(a, int) and isinstance(b, int):
                if a != b:
                    return Mismatch(i, a, b)
                continue
            mm = compare(a, b)
            if mm is not None:
                return mm
        return None
    if isinstance(lhs, RationalFunction) or isinstance(rhs, RationalFunction):
        mm = RationalFunction.coerce(lhs).first_mismatch(RationalFunction.coerce(rhs))
    elif isinstance(lhs, TruncatedSeries):
        mm = lhs.first_mismatch(rhs)
    elif isinstance(rhs, TruncatedSeries):
        mm = rhs.first_mismatch(lhs)
        mm = mm and (mm[0], mm[2], mm[1])
    else:
        a = lhs if isinstance(lhs, LaurentPoly) else LaurentPoly(lhs)
        b = rhs if isinstance(rhs, LaurentPoly) else LaurentPoly(rhs)
        mm = a.first_mismatch(b)
    return Mismatch(*mm) if mm else None


def run_check(family: str, params: dict[str, int], compute: Callable[[], tuple[Any, Any]],
              order: int | None = None) -> VerificationReport:
    """Evaluate ``compute() -> (lhs, rhs)`` and wrap the outcome in a report.

    ``InvalidInstance`` raised by ``compute`` yields an ``invalid`` report.
    For series checks the window actually compared must reach ``order``.
    """
    t0 = time.perf_counter()
    try:
        lhs, rhs = compute()
    except InvalidInstance as exc:
        ms = (time.perf_counter() - t0) * 1e3
        return VerificationReport(family, dict(params), INVALID, order, None, ms, note=str(exc))
    if _corrupt.get():
        lhs = _corrupt_side(lhs)
    if order is not None:
        for side in (lhs, rhs):
            if isinstance(side, TruncatedSeries) and side.order < order:
                raise RuntimeError(f"{family}{params}: side known only to q^{side.order} < q^{order}")
        lhs, rhs = (s.truncate(order) if isinstance(s, TruncatedSeries) else s for s in (lhs, rhs))
    mm = compare(lhs, rhs)
    ms = (time.perf_counter() - t0) * 1e3
    return VerificationReport(family, dict(params), FAIL if mm else PASS, order, mm, ms)
