"""Partitions, Frobenius symbols, successive ranks and (2,i)-oscillations.

Everything here is brute-force enumeration, used to give the Schur
polynomials and the partial theta sums a combinatorial reading and to check
it by counting.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .laurent import LaurentPoly
from .qpoch import q_binomial
from .report import InvalidInstance, VerificationReport, run_check
from .schur import Flavor, partial_theta, schur

__all__ = [
    "Partition",
    "FrobeniusSymbol",
    "Sign",
    "OscillationSpec",
    "partition_stats",
    "partitions_of",
    "box_partitions",
    "b_set",
    "q_set",
    "count_b",
    "count_q",
    "bijection_bq",
    "oscillation",
    "oscillation_bruteforce",
    "count_pm",
    "box_bounds",
    "verify_gf_pm",
    "verify_inclusion_exclusion",
    "verify_bq_bijection",
    "verify_schur_counts",
    "minimal_partition",
    "minimal_weight",
    "verify_minimal",
    "verify_conjugation_rules",
    "signed_sum_check",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, j: int) -> int:
        return self.parts[j]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    @property
    def durfee(self) -> int:
        return sum(1 for j, p in enumerate(self.parts, 1) if p >= j)

    @property
    def frobenius(self) -> "FrobeniusSymbol":
        d = self.durfee
        conj = self.conjugate.parts
        return FrobeniusSymbol(tuple(self.parts[j] - j - 1 for j in range(d)),
                               tuple(conj[j] - j - 1 for j in range(d)))

    @property
    def ranks(self) -> tuple[int, ...]:
        return self.frobenius.ranks

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Two strictly decreasing rows of nonnegative integers of equal length."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        top, bottom = tuple(self.top), tuple(self.bottom)
        if len(top) != len(bottom):
            raise ValueError("Frobenius rows differ in length")
        for row in (top, bottom):
            if any(x < 0 for x in row) or any(a <= b for a, b in zip(row, row[1:])):
                raise ValueError(f"Frobenius row not strictly decreasing and nonnegative: {row}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def size(self) -> int:
        return len(self.top)

    @property
    def weight(self) -> int:
        return self.size + sum(self.top) + sum(self.bottom)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(t - b for t, b in zip(self.top, self.bottom))

    def to_partition(self) -> Partition:
        d = self.size
        if d == 0:
            return Partition()
        rows = [t + j + 1 for j, t in enumerate(self.top)]
        cols = [b + j + 1 for j, b in enumerate(self.bottom)]
        # rows below the Durfee square read off the column lengths
        below = [sum(1 for c in cols if c >= r) for r in range(d + 1, cols[0] + 1)]
        return Partition(tuple(rows + below))

    def __str__(self) -> str:
        return f"({' '.join(map(str, self.top))} / {' '.join(map(str, self.bottom))})"


def partition_stats(lam: Partition | Sequence[int]):
    """``(weight, conjugate, durfee, frobenius, ranks)``."""
    lam = lam if isinstance(lam, Partition) else Partition.of(*lam)
    return lam.weight, lam.conjugate, lam.durfee, lam.frobenius, lam.ranks


# ---------------------------------------------------------------- enumeration

def _parts_at_most(total: int, largest: int, max_len: int | None) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for p in range(min(total, largest), 0, -1):
        for rest in _parts_at_most(total - p, p, None if max_len is None else max_len - 1):
            yield (p,) + rest


def partitions_of(l: int, largest: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``l`` with optional caps on the largest part and the number of parts."""
    if l < 0:
        return
    for p in _parts_at_most(l, l if largest is None else largest, max_len):
        yield Partition(p)


@lru_cache(maxsize=256)
def box_partitions(a: int, b: int) -> tuple[Partition, ...]:
    """All partitions with largest part ``<= a`` and at most ``b`` parts."""
    if a < 0 or b < 0:
        return ()
    out = []
    for length in range(b + 1):
        for parts in itertools.combinations_with_replacement(range(a, 0, -1), length):
            out.append(Partition(parts))
    return tuple(out)


def _check_i(i: int) -> None:
    if i not in (1, 2):
        raise InvalidInstance("i must be 1 or 2")


@lru_cache(maxsize=256)
def b_set(i: int, n: int) -> tuple[Partition, ...]:
    """Partitions with parts ``<= n-2``, gaps ``>= 2``, and no part 1 when ``i = 1`` (all weights)."""
    _check_i(i)
    top = n - 2
    smallest = 2 if i == 1 else 1
    out: list[Partition] = []
    if n < 3 - i:
        # degenerate box; matches e_1 = 1, d_1 = 0 and the q-side bounds
        return ()

    def grow(prefix: tuple[int, ...], cap: int):
        out.append(Partition(prefix))
        for p in range(cap, smallest - 1, -1):
            grow(prefix + (p,), p - 2)

    grow((), top)
    return tuple(out)


def q_bounds(i: int, n: int) -> tuple[int, int]:
    """(largest part bound, number of parts bound) for ``q_i(., n)``."""
    _check_i(i)
    return ((n // 2, (n - 1) // 2) if i == 2 else ((n + 1) // 2, (n - 2) // 2))


@lru_cache(maxsize=256)
def q_set(i: int, n: int) -> tuple[Partition, ...]:
    """Partitions within the size bounds whose successive ranks are in {0,1} (i=2) or {1,2} (i=1)."""
    a, b = q_bounds(i, n)
    allowed = {0, 1} if i == 2 else {1, 2}
    return tuple(lam for lam in box_partitions(a, b) if set(lam.ranks) <= allowed)


def count_b(i: int, l: int, n: int) -> int:
    return sum(1 for lam in b_set(i, n) if lam.weight == l)


def count_q(i: int, l: int, n: int) -> int:
    return sum(1 for lam in q_set(i, n) if lam.weight == l)


def _in_b(i: int, lam: Partition) -> bool:
    p = lam.parts
    return all(x - y >= 2 for x, y in zip(p, p[1:])) and not (i == 1 and p and p[-1] == 1)


def bijection_bq(i: int, lam: Partition | Sequence[int], direction: str = "forward",
                 n: int | None = None) -> Partition:
    """Weight-preserving map ``b_i -> q_i`` (``forward``) or back (``backward``).

    Forward sends a part ``p`` to the Frobenius column ``(floor(p/2), floor((p-1)/2))``
    for ``i = 2`` and ``(floor((p+1)/2), floor((p-2)/2))`` for ``i = 1``; backward
    reads each column ``(s, c)`` as the part ``s + c + 1``.  With ``n`` given the
    size bounds are checked too.
    """
    _check_i(i)
    lam = lam if isinstance(lam, Partition) else Partition.of(*lam)
    if direction == "forward":
        if not _in_b(i, lam) or (n is not None and lam.parts and lam.largest > n - 2):
            raise InvalidInstance(f"{lam} is not in b_{i}")
        if i == 2:
            cols = [(p // 2, (p - 1) // 2) for p in lam]
        else:
            cols = [((p + 1) // 2, (p - 2) // 2) for p in lam]
        return FrobeniusSymbol(tuple(s for s, _ in cols), tuple(c for _, c in cols)).to_partition()
    if direction == "backward":
        allowed = {0, 1} if i == 2 else {1, 2}
        fr = lam.frobenius
        if not set(fr.ranks) <= allowed:
            raise InvalidInstance(f"{lam} is not in q_{i}")
        if n is not None:
            a, b = q_bounds(i, n)
            if lam.parts and (lam.largest > a or len(lam) > b):
                raise InvalidInstance(f"{lam} exceeds the q_{i}(., {n}) bounds")
        return Partition(tuple(s + c + 1 for s, c in zip(fr.top, fr.bottom)))
    raise ValueError("direction must be 'forward' or 'backward'")


# --------------------------------------------------------------- oscillation

class Sign(str, enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @classmethod
    def parse(cls, s) -> "Sign":
        if isinstance(s, cls):
            return s
        s = str(s).lower()
        if s in ("+", "pos", "positive", "1", "+1"):
            return cls.POSITIVE
        if s in ("-", "neg", "negative", "-1"):
            return cls.NEGATIVE
        raise ValueError(f"unknown sign {s!r}")


@dataclass(frozen=True)
class OscillationSpec:
    i: int
    sign: Sign = Sign.POSITIVE

    def thresholds(self) -> tuple[int, int]:
        """(high, low): odd positions must be ``>= high`` for a positive oscillation, even ones ``<= low``."""
        return 4 - self.i, 1 - self.i


def _osc_from_ranks(ranks: Sequence[int], i: int, sign: Sign) -> int:
    high, low = 4 - i, 1 - i
    # state 0: next chosen element must be the "first kind" one
    want_high = sign is Sign.POSITIVE
    count = 0
    for x in ranks:
        if (want_high and x >= high) or (not want_high and x <= low):
            count += 1
            want_high = not want_high
    return count


def oscillation(lam: Partition | Sequence[int], spec: OscillationSpec) -> int:
    """Length of the longest subsequence of ranks alternating between the two thresholds.

    Two-state scan: taking the first element that fits the current state
    never hurts, so the greedy walk gives the optimum.
    """
    lam = lam if isinstance(lam, Partition) else Partition.of(*lam)
    return _osc_from_ranks(lam.ranks, spec.i, Sign.parse(spec.sign))


def oscillation_bruteforce(lam: Partition | Sequence[int], spec: OscillationSpec) -> int:
    """Reference version trying every subsequence, longest first."""
    lam = lam if isinstance(lam, Partition) else Partition.of(*lam)
    ranks = lam.ranks
    high, low = spec.thresholds()
    first_high = Sign.parse(spec.sign) is Sign.POSITIVE
    for size in range(len(ranks), 0, -1):
        for idx in itertools.combinations(range(len(ranks)), size):
            ok = True
            for pos, t in enumerate(idx):
                is_high = (pos % 2 == 0) == first_high
                x = ranks[t]
                if (is_high and x < high) or (not is_high and x > low):
                    ok = False
                    break
            if ok:
                return size
    return 0


def box_bounds(n: int, i: int) -> tuple[int, int]:
    """``(a_bar, b_bar) = (floor((n-i+2)/2), floor((n+i-3)/2))``."""
    return (n - i + 2) // 2, (n + i - 3) // 2


def count_pm(i: int, a: int, b: int, j: int, l: int, sign) -> int:
    """Partitions of ``l`` in an ``a x b`` box whose (2,i)-oscillation of the given sign is ``>= j``."""
    _check_i(i)
    sign = Sign.parse(sign)
    return sum(1 for lam in box_partitions(a, b)
               if lam.weight == l and _osc_from_ranks(lam.ranks, i, sign) >= j)


def _pm_poly(i: int, a: int, b: int, j: int, sign: Sign) -> LaurentPoly:
    acc: dict[int, int] = {}
    for lam in box_partitions(a, b):
        if _osc_from_ranks(lam.ranks, i, sign) >= j:
            acc[lam.weight] = acc.get(lam.weight, 0) + 1
    return LaurentPoly(acc)


def verify_gf_pm(i: int, n: int, j: int) -> VerificationReport:
    """``q^(j(5j-2i+5)/2) [n-1, floor((n+i-5j-3)/2)]`` against the p_i / m_i generating function.

    ``j <= 0`` uses oscillation ``-j`` (positive for even ``j``, negative for odd),
    ``j >= 0`` uses oscillation ``j`` (positive for odd, negative for even).
    Every partition in the box is enumerated, so the equality is exact.
    """

    def compute():
        _check_i(i)
        if n < 1:
            raise InvalidInstance("n must be >= 1")
        a, b = box_bounds(n, i)
        left = q_binomial(n - 1, (n + i - 5 * j - 3) // 2).shift(j * (5 * j - 2 * i + 5) // 2)
        if j <= 0:
            sign = Sign.POSITIVE if j % 2 == 0 else Sign.NEGATIVE
        else:
            sign = Sign.POSITIVE if j % 2 else Sign.NEGATIVE
        return left, _pm_poly(i, a, b, abs(j), sign)

    return run_check("gf-pm", {"i": i, "n": n, "j": j}, compute)


def verify_inclusion_exclusion(i: int, n: int) -> VerificationReport:
    """``Q_i(l,n) = sum_{j>=0} (-1)^j p_i(j) + sum_{j>=1} (-1)^j m_i(j)`` for every ``l``."""

    def compute():
        _check_i(i)
        a, b = box_bounds(n, i)
        alt: dict[int, int] = {}
        for lam in box_partitions(a, b):
            r = lam.ranks
            jp = _osc_from_ranks(r, i, Sign.POSITIVE)
            jm = _osc_from_ranks(r, i, Sign.NEGATIVE)
            # sum_{j=0}^{jp} (-1)^j + sum_{j=1}^{jm} (-1)^j
            c = (1 if jp % 2 == 0 else 0) + (-1 if jm % 2 else 0)
            if c:
                alt[lam.weight] = alt.get(lam.weight, 0) + c
        q = {}
        for lam in q_set(i, n):
            q[lam.weight] = q.get(lam.weight, 0) + 1
        return LaurentPoly(q), LaurentPoly(alt)

    return run_check("qi-inclusion-exclusion", {"i": i, "n": n}, compute)


def verify_bq_bijection(i: int, n: int, l_max: int | None = None) -> VerificationReport:
    """Counts ``B_i(l,n) = Q_i(l,n)`` for ``l <= l_max`` and the explicit bijection both ways.

    The left side lists the counts and then the images of ``b_i`` under the
    forward map followed by the round trips; the right side lists the
    counts of ``q_i`` and the sets they must reproduce.
    """

    def compute():
        _check_i(i)
        bs = b_set(i, n)
        qs = q_set(i, n)
        top = l_max if l_max is not None else max([x.weight for x in bs + qs], default=0)
        bcount = [sum(1 for x in bs if x.weight == l) for l in range(top + 1)]
        qcount = [sum(1 for x in qs if x.weight == l) for l in range(top + 1)]
        bs = sorted(x for x in bs if x.weight <= top)
        qs = sorted(x for x in qs if x.weight <= top)
        fwd = sorted(bijection_bq(i, x, "forward", n) for x in bs)
        back = sorted(bijection_bq(i, x, "backward", n) for x in qs)
        rt_b = sorted(bijection_bq(i, bijection_bq(i, x, "forward", n), "backward", n) for x in bs)
        rt_q = sorted(bijection_bq(i, bijection_bq(i, x, "backward", n), "forward", n) for x in qs)
        weights_ok = [int(all(bijection_bq(i, x, "forward", n).weight == x.weight for x in bs))]
        left = bcount + weights_ok + [x.parts for x in fwd + back + rt_b + rt_q]
        right = qcount + [1] + [x.parts for x in qs + bs + bs + qs]
        return _encode(left), _encode(right)

    params = {"i": i, "n": n}
    if l_max is not None:
        params["l_max"] = l_max
    return run_check("bq-bijection", params, compute)


def _encode(items) -> list[int]:
    """Flatten ints and part tuples into an int list whose equality means equality of the items."""
    out: list[int] = []
    for x in items:
        if isinstance(x, tuple):
            out.append(-1 - len(x))
            out.extend(x)
        else:
            out.append(x)
    return out


def verify_schur_counts(n_max: int) -> list[VerificationReport]:
    """Coefficients of ``e_n`` and ``d_n`` are the counts ``B_2(l,n)`` and ``B_1(l,n)``."""
    out = []
    for n in range(1, n_max + 1):
        for f in (Flavor.E, Flavor.D):
            def compute(n=n, f=f):
                acc: dict[int, int] = {}
                for lam in b_set(f.index, n):
                    acc[lam.weight] = acc.get(lam.weight, 0) + 1
                return schur(f, n), LaurentPoly(acc)
            out.append(run_check("schur-count", {"n": n, "i": f.index}, compute))
    return out


# -------------------------------------------------------- minimal partitions

def _minus_odd(i: int, j: int) -> Partition:
    parts = []
    for t in range(0, (j - 3) // 2 + 1):
        parts += [(5 * j - 3) // 2 - 3 * t] * 2
    parts += [j] * i
    for t in range(1, (j - 1) // 2 + 1):
        parts += [j - 2 * t] * 3
    return Partition(tuple(parts))


def _plus_even(i: int, j: int) -> Partition:
    parts = [5 * j // 2]
    for t in range(1, j // 2):
        parts += [5 * j // 2 - 3 * t] * 2
    parts += [j] * i
    for t in range(1, j // 2):
        parts += [j - 2 * t] * 3
    return Partition(tuple(parts))


def minimal_partition(i: int, j: int, sign) -> Partition:
    """The lightest partition whose (2,i)-oscillation of the given sign is ``j``.

    Closed forms exist for ``+`` with ``j`` even and ``-`` with ``j`` odd; the
    other two cases are conjugates of those with ``i`` replaced by ``5 - i``.
    """
    sign = Sign.parse(sign)
    if i not in (1, 2, 3, 4):
        raise ValueError("i must be in 1..4")
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return Partition()
    if j % 2 == 0:
        return _plus_even(i, j) if sign is Sign.POSITIVE else _plus_even(5 - i, j).conjugate
    return _minus_odd(i, j) if sign is Sign.NEGATIVE else _minus_odd(5 - i, j).conjugate


def minimal_weight(i: int, j: int, sign) -> int:
    """``j(5j+2i-5)/2`` or ``j(5j-2i+5)/2`` according to sign and parity."""
    sign = Sign.parse(sign)
    plus_form = (sign is Sign.POSITIVE) == (j % 2 == 0)
    return j * (5 * j + 2 * i - 5) // 2 if plus_form else j * (5 * j - 2 * i + 5) // 2


def _durfee_at_least(d_min: int, w_max: int) -> Iterator[Partition]:
    """Partitions of weight ``<= w_max`` with Durfee size ``>= d_min``: a square plus a piece right and below."""
    for d in range(max(d_min, 0), int(w_max ** 0.5) + 1):
        spare = w_max - d * d
        for right_w in range(spare + 1):
            rights = list(_parts_at_most(right_w, right_w, d))
            for below_w in range(spare - right_w + 1):
                for below in _parts_at_most(below_w, d, None):
                    for right in rights:
                        rows = [d + (right[k] if k < len(right) else 0) for k in range(d)]
                        yield Partition(tuple(rows) + below)


def verify_minimal(i: int, j: int, sign) -> VerificationReport:
    """Closed form against exhaustive search.

    Left: [weight, oscillation, Durfee size, lightest weight found, how many partitions have it].
    Right: [formula weight, j, j, formula weight, 1].
    """
    sign = Sign.parse(sign)

    def compute():
        _check_i(i)
        lam = minimal_partition(i, j, sign)
        w = minimal_weight(i, j, sign)
        best, count = None, 0
        for mu in _durfee_at_least(j, w):
            if _osc_from_ranks(mu.ranks, i, sign) >= j:
                if best is None or mu.weight < best:
                    best, count = mu.weight, 1
                elif mu.weight == best:
                    count += 1
        spec = OscillationSpec(i, sign)
        return [lam.weight, oscillation(lam, spec), lam.durfee, best, count], [w, j, j, w, 1]

    return run_check("minimal", {"i": i, "j": j, "sign": 1 if sign is Sign.POSITIVE else -1}, compute)


def verify_conjugation_rules(j_max: int = 6) -> list[VerificationReport]:
    """``(lambda+_{i,j})' = lambda-_{5-i,j}`` for odd ``j``, ``(lambda-_{i,j})' = lambda+_{5-i,j}`` for even ``j``.

    Each side is built independently: the odd ``+`` and even ``-`` cases via
    exhaustive search, the others from their closed forms.
    """
    out = []
    for i in (1, 2):
        for j in range(1, j_max + 1):
            if j % 2:
                src, dst = Sign.POSITIVE, Sign.NEGATIVE
            else:
                src, dst = Sign.NEGATIVE, Sign.POSITIVE

            def compute(i=i, j=j, src=src, dst=dst):
                searched = _search_minimal(i, j, src)
                return list(searched.conjugate.parts), list(minimal_partition(5 - i, j, dst).parts)
            out.append(run_check("minimal-conjugation", {"i": i, "j": j}, compute))
    return out


def _search_minimal(i: int, j: int, sign: Sign) -> Partition:
    w = 0
    while True:
        hits = [mu for mu in _durfee_at_least(j, w) if mu.weight == w and _osc_from_ranks(mu.ranks, i, sign) >= j]
        if hits:
            if len(hits) > 1:
                raise RuntimeError(f"several lightest partitions at weight {w}")
            return hits[0]
        w += 1


def minimal_set(i: int, w_max: int) -> list[Partition]:
    """``M_i`` up to weight ``w_max``: the empty partition and ``lambda+-_{i,j}`` for ``j >= 1``."""
    out = [Partition()]
    j = 1
    while True:
        added = False
        for s in (Sign.POSITIVE, Sign.NEGATIVE):
            if minimal_weight(i, j, s) <= w_max:
                out.append(minimal_partition(i, j, s))
                added = True
        if not added:
            return out
        j += 1


def signed_sum_check(i: int, n: int, k: int) -> VerificationReport:
    """Partial theta sum ``sum_{j=-n-k}^{n} (-1)^j q^(j(5j-2i+5)/2)`` as a signed sum over ``M_i`` in a box."""

    def compute():
        _check_i(i)
        if k not in (0, 1) or n < 0:
            raise InvalidInstance("need n >= 0 and k in {0, 1}")
        a = (5 * n + 2 * k * i - 2 * i + 5) // 2
        b = (5 * n + 2 * k * i) // 2
        acc: dict[int, int] = {}
        for lam in minimal_set(i, a * b):
            if lam.largest <= a and len(lam) <= b:
                acc[lam.weight] = acc.get(lam.weight, 0) + (-1) ** lam.durfee
        return partial_theta(n, k, 5 - 2 * i), LaurentPoly(acc)

    return run_check("signed-sum", {"i": i, "n": n, "k": k}, compute)
