"""Catalogue of verifiable families for the command line.

A family expands its parameter grid into tasks.  A task is a plain
``(runner, args, order)`` triple naming a module-level function, so it can be
shipped to worker processes; every task produces exactly one report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import bailey, chain, partitions, schur
from .report import VerificationReport, corrupting

Range = tuple[int, int]


@dataclass(frozen=True)
class Task:
    runner: str
    args: tuple
    order: int | None = None


@dataclass(frozen=True)
class Family:
    name: str
    anchor: str
    params: dict[str, Range]          # grid parameters with default inclusive ranges
    expand: Callable[[dict[str, list[int]], int | None], list[Task]]
    optional: tuple[str, ...] = ()    # may be pinned, never swept by default
    default_order: int | None = None  # None: exact family
    notes: str = ""
    fixed: dict[str, Any] = field(default_factory=dict)

    @property
    def is_series(self) -> bool:
        return self.default_order is not None

    def schema(self) -> dict[str, Any]:
        out: dict[str, Any] = {p: f"{lo}..{hi}" for p, (lo, hi) in self.params.items()}
        for p in self.optional:
            out[p] = "optional"
        return out


# --------------------------------------------------------------- runners

def _thm(n, k, i):
    flavors = (schur.Flavor.E, schur.Flavor.D) if i is None else (schur.Flavor.E if i == 2 else schur.Flavor.D,)
    return schur.check_theorem(n, k, flavors)


def _chain(name, params, order):
    return chain.verify_family(name, dict(params), order)


def _qcv(n, A, C):
    return bailey.qcv_check(n, A, C)


def _minimal(i, j, sign):
    return partitions.verify_minimal(i, j, sign)


RUNNERS: dict[str, Callable[..., VerificationReport]] = {
    "thm": _thm,
    "rrpoly": schur.rrpoly_check,
    "aj": schur.aj_check,
    "eulerpol": schur.eulerpol_check,
    "wslim": schur.wslim_check,
    "frec": schur.frec_check,
    "frec-telescoped": schur.frec_telescoped_check,
    "coeff": schur.coeff_check,
    "schur-three-way": schur.schur_three_way_check,
    "chain": _chain,
    "qcv": _qcv,
    "ws": bailey.ws_check,
    "rogers": bailey.rogers_pair_check,
    "bailey-roundtrip": bailey.bailey_roundtrip_check,
    "bq-bijection": partitions.verify_bq_bijection,
    "gf-pm": partitions.verify_gf_pm,
    "inclusion-exclusion": partitions.verify_inclusion_exclusion,
    "minimal": _minimal,
    "signed-sum": partitions.signed_sum_check,
}


def run_task(task: Task, corrupt: bool = False) -> VerificationReport:
    fn = RUNNERS[task.runner]
    with corrupting(corrupt):
        if task.runner == "chain":
            return fn(*task.args, task.order)
        return fn(*task.args)


# --------------------------------------------------------------- expanders

def _product(values: dict[str, list[int]], names):
    combos: list[dict[str, int]] = [{}]
    for n in names:
        combos = [dict(c, **{n: v}) for c in combos for v in values[n]]
    return combos


def _simple(runner: str, names: tuple[str, ...]):
    def expand(values, order):
        return [Task(runner, tuple(c[n] for n in names)) for c in _product(values, names)]
    return expand


def _expand_thm(values, order):
    i_vals = values.get("i") or [None]
    return [Task("thm", (c["n"], c["k"], i)) for c in _product(values, ("n", "k")) for i in i_vals]


def _expand_eulerpol(values, order):
    out = []
    for c in _product(values, ("n", "k")):
        out.append(Task("eulerpol", (c["n"], c["k"])))
        out.append(Task("wslim", (c["n"], c["k"])))
    return out


def _expand_frec(values, order):
    out = []
    for c in _product(values, ("k", "n")):
        n, k = c["n"], c["k"]
        ms = values.get("m") or list(range(n))
        out += [Task("frec", (n, m, k)) for m in ms]
        if "m" not in values:
            out.append(Task("frec-telescoped", (n, k)))
    return out


def _expand_coeff(values, order):
    out = []
    for n in values["n"]:
        ms = values.get("m") or list(range(3 * n + 2))
        out += [Task("coeff", (n, m)) for m in ms]
    return out


def _expand_chain(fam: chain.IdentityFamily):
    names = chain.FAMILY_PARAMS[fam]

    def expand(values, order):
        return [Task("chain", (fam.value, tuple(c.items())), order) for c in _product(values, names)]
    return expand


def _expand_zero(values, order):
    out = []
    for a in values["a"]:
        for fam in (chain.IdentityFamily.ZERO1, chain.IdentityFamily.ZERO2):
            out.append(Task("chain", (fam.value, (("a", a),)), order))
    return out


def _expand_altsum(values, order):
    return [Task("chain", ("ALTSUM", (("j", j),)), None) for j in values["j"]]


def _expand_qcv(values, order):
    out = []
    for c in _product(values, ("n", "A", "C")):
        n, C = c["n"], c["C"]
        # (c;q)_n vanishes for -n < C <= 0; such points are skipped unless pinned
        if -n < C <= 0 and len(values["C"]) > 1:
            continue
        out.append(Task("qcv", (n, c["A"], C)))
    return out


def _expand_ws(values, order):
    out = []
    pinned = [p for p in "ABCDE" if p in values]
    for n in values["n"]:
        if len(pinned) == 5:
            tuples = [tuple(values[p][0] for p in "ABCDE")]
        else:
            tuples = [t for t in bailey.admissible_ws_tuples(n, 10 ** 6)
                      if all(t["ABCDE".index(p)] in values[p] for p in pinned)][:values["count"][0]]
        out += [Task("ws", (n, *t)) for t in tuples]
    return out


def _expand_rogers(values, order):
    return [Task("rogers", (L,)) for L in values["L"]]


def _expand_roundtrip(values, order):
    return [Task("bailey-roundtrip", (s, k, values["L"][0])) for s in values["seed"] for k in values["kappa"]]


def _expand_bq(values, order):
    return [Task("bq-bijection", (c["i"], c["n"], values["l"][0])) for c in _product(values, ("i", "n"))]


def _expand_gf(values, order):
    out = []
    for c in _product(values, ("i", "n")):
        out += [Task("gf-pm", (c["i"], c["n"], j)) for j in values["j"]]
        out.append(Task("inclusion-exclusion", (c["i"], c["n"])))
    return out


def _expand_minimal(values, order):
    return [Task("minimal", (c["i"], c["j"], c["sign"])) for c in _product(values, ("i", "j", "sign"))]


F = chain.IdentityFamily

FAMILIES: dict[str, Family] = {f.name: f for f in [
    Family("thm", "partial theta sums of e_n (i=2) and d_n (i=1) as alternating sums of (q;q) quotients",
           {"n": (0, 25), "k": (0, 1)}, _expand_thm, optional=("i",)),
    Family("rrpoly", "polynomial Rogers-Ramanujan: sum q^(r(r+a)) [n-r-a, r] = sum (-1)^j q^(j(5j+2a+1)/2) [n, (n-5j-a)/2]",
           {"n": (0, 25), "a": (0, 1)}, _simple("rrpoly", ("n", "a"))),
    Family("aj", "partial theta sums through Szego polynomials K_r",
           {"n": (0, 25), "k": (0, 1)}, _simple("aj", ("n", "k"))),
    Family("eulerpol", "partial pentagonal sums as alternating (q;q) quotients, with the limiting Watson-Sears form",
           {"n": (0, 25), "k": (0, 1)}, _expand_eulerpol),
    Family("frec", "recurrence for the Szego summands and the telescoped difference of full sums",
           {"n": (1, 10), "k": (0, 1)}, _expand_frec, optional=("m",)),
    Family("coeff", "coefficient of a^m in the multiple-sum comparison, cleared by (q;q)_n",
           {"n": (0, 6)}, _expand_coeff, optional=("m",)),
    Family("gis", "Garrett-Ismail-Stanton: sum q^(n(n+m))/(q;q)_n through d_m, e_m and the two Rogers-Ramanujan products",
           {"m": (0, 15)}, _expand_chain(F.GIS), default_order=50),
    Family("am", "sum q^(n(n+2m+k+2))/(q;q)_n as a series over partial theta windows",
           {"m": (0, 10), "k": (0, 1)}, _expand_chain(F.AM), default_order=50),
    Family("inffin", "infinite product times a finite window as a single-sum series",
           {"r": (0, 6), "k": (0, 1)}, _expand_chain(F.INFFIN), default_order=50),
    Family("lemma1", "finite l-sum over [M, l] against a shifted theta window",
           {"M": (0, 7), "n": (-4, 4), "k": (0, 1)}, _expand_chain(F.LEMMA1), default_order=25),
    Family("lquad", "l-sum with quadratic exponent reduced to a single series",
           {"m": (0, 4), "n": (-4, 4), "i": (0, 1), "k": (0, 1)}, _expand_chain(F.LQUAD), default_order=25),
    Family("llin", "l-sum with linear exponent reduced to a single series",
           {"m": (0, 4), "n": (-4, 4), "i": (0, 1), "k": (0, 1)}, _expand_chain(F.LLIN), default_order=25),
    Family("inverted", "inverted double sum against its closed finite product form",
           {"m": (0, 4), "n": (-4, 4), "i": (0, 1), "k": (0, 1)}, _expand_chain(F.INVERTED), default_order=25),
    Family("del", "double sum that vanishes on the window",
           {"m": (-4, 4), "n": (-4, 4), "i": (0, 1), "k": (0, 1)}, _expand_chain(F.DEL), default_order=25),
    Family("symm", "symmetric double sum in (m, n)",
           {"m": (-4, 4), "n": (-4, 4), "k": (0, 1)}, _expand_chain(F.SYMM), default_order=25),
    Family("symm2", "two-piece symmetric double sum",
           {"m": (-4, 4), "n": (-4, 4)}, _expand_chain(F.SYMM2), default_order=25),
    Family("fin", "iterated sum giving Jacobi's cube at m = 0 and q^m times its reflection otherwise",
           {"m": (-4, 4)}, _expand_chain(F.FIN), default_order=25),
    Family("zero", "the two vanishing single sums (zero1, zero2)",
           {"a": (-4, 4)}, _expand_zero, default_order=25),
    Family("altsum", "exact alternating finite sum",
           {"j": (0, 4)}, _expand_altsum),
    Family("qcv", "q-Chu-Vandermonde with a = q^A, c = q^C",
           {"n": (0, 4), "A": (-2, 2), "C": (1, 5)}, _expand_qcv),
    Family("ws", "terminating very-well-poised 8W7 against the balanced 4phi3 (Watson-Sears)",
           {"n": (0, 3)}, _expand_ws, optional=("A", "B", "C", "D", "E"),
           fixed={"count": 10}),
    Family("rogers", "Rogers' Bailey pair relative to q", {}, _expand_rogers, fixed={"L": 15}),
    Family("bailey-roundtrip", "forward then inverse Bailey transform on seeded random rational sequences",
           {"seed": (0, 19), "kappa": (0, 1)}, _expand_roundtrip, fixed={"L": 8}),
    Family("bq-bijection", "B_i(l,n) = Q_i(l,n): gap-2 partitions onto rank-restricted ones, counts and bijection",
           {"i": (1, 2), "n": (1, 12)}, _expand_bq, fixed={"l": 30}),
    Family("gf-pm", "shifted q-binomials as p_i / m_i oscillation generating functions, and inclusion-exclusion for Q_i",
           {"i": (1, 2), "n": (1, 8), "j": (-2, 2)}, _expand_gf),
    Family("minimal", "closed-form lightest partitions of given (2,i)-oscillation against exhaustive search",
           {"i": (1, 2), "j": (1, 4), "sign": (-1, 1)}, _expand_minimal),
    Family("signed-sum", "partial theta sums as signed sums over minimal partitions in a box",
           {"i": (1, 2), "n": (0, 5), "k": (0, 1)}, _simple("signed-sum", ("i", "n", "k"))),
    Family("schur-three-way", "recurrence, alternating and positive sums for e_n and d_n agree",
           {"n": (1, 200), "i": (1, 2)}, _simple("schur-three-way", ("n", "i"))),
]}


def param_names() -> list[str]:
    names: set[str] = set()
    for f in FAMILIES.values():
        names.update(f.params)
        names.update(f.optional)
        names.update(f.fixed)
    return sorted(names)


def default_values(fam: Family) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {p: list(range(lo, hi + 1)) for p, (lo, hi) in fam.params.items()}
    if fam.name == "minimal":
        out["sign"] = [1, -1]
    for p, v in fam.fixed.items():
        out[p] = [v]
    return out
