"""``qrr`` command line: verify families over grids, expand objects, list the catalogue.

Exit codes: 0 when every report passes, 1 when any fails or is invalid,
2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Iterable, Iterator, Sequence

from .registry import FAMILIES, Family, Task, default_values, param_names, run_task
from .report import VerificationReport

EXPAND_OBJECTS = ("e", "d", "K", "theta", "qbin")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ output

def _params_text(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def _mismatch_text(r: VerificationReport) -> str:
    mm = r.mismatch
    return "" if mm is None else f"q^{mm.exponent}: {mm.lhs} != {mm.rhs}"


def format_report(r: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(r.to_json(), separators=(",", ":"))
    if fmt == "tsv":
        order = "" if r.order is None else str(r.order)
        mm = "" if r.mismatch is None else f"{r.mismatch.exponent}:{r.mismatch.lhs}:{r.mismatch.rhs}"
        return "\t".join([r.family, _params_text(r.params), order, r.status, mm, str(round(r.elapsed_ms))])
    order = "-" if r.order is None else str(r.order)
    line = f"{r.status:<7} {r.family:<22} {_params_text(r.params):<32} N={order:<4} {round(r.elapsed_ms):>7} ms"
    extra = _mismatch_text(r) or r.note
    return f"{line}  {extra}" if extra else line


TSV_HEADER = "family\tparams\torder\tstatus\tmismatch\telapsed_ms"


# ------------------------------------------------------------------ grids

_GRID_ITEM = re.compile(r"^\s*([A-Za-z_]\w*)\s*=\s*(-?\d+)(?:\s*\.\.\s*(-?\d+))?\s*$")


def parse_grid(text: str) -> dict[str, list[int]]:
    """``"m=-4..4,n=2"`` -> ``{"m": [-4, ..., 4], "n": [2]}``."""
    out: dict[str, list[int]] = {}
    for item in text.split(","):
        if not item.strip():
            continue
        m = _GRID_ITEM.match(item)
        if not m:
            raise UsageError(f"bad grid entry {item!r}; expected name=lo..hi or name=value")
        lo = int(m.group(2))
        hi = int(m.group(3)) if m.group(3) is not None else lo
        if hi < lo:
            raise UsageError(f"empty range in grid entry {item!r}")
        out[m.group(1)] = list(range(lo, hi + 1))
    return out


def build_tasks(fam: Family, args: argparse.Namespace) -> list[Task]:
    values = default_values(fam)
    known = set(fam.params) | set(fam.optional) | set(fam.fixed)

    for flag, name in (("n_max", "n"), ("m_max", "m")):
        cap = getattr(args, flag)
        if cap is None:
            continue
        if cap < 0:
            raise UsageError(f"--{flag.replace('_', '-')} must be nonnegative")
        if name not in fam.params:
            raise UsageError(f"{fam.name} has no parameter {name}")
        lo = fam.params[name][0]
        values[name] = list(range(-cap, cap + 1)) if lo < 0 else list(range(lo, cap + 1))

    if args.grid:
        for name, vals in parse_grid(args.grid).items():
            if name not in known:
                raise UsageError(f"{fam.name} has no parameter {name}")
            values[name] = vals

    for name in param_names():
        v = getattr(args, f"p_{name}", None)
        if v is None:
            continue
        if name not in known:
            raise UsageError(f"{fam.name} has no parameter {name}")
        values[name] = [v]

    if "sign" in values and any(s not in (-1, 1) for s in values["sign"]):
        raise UsageError("sign must be 1 or -1")

    if fam.is_series:
        order = fam.default_order if args.order is None else args.order
        if order < 0:
            raise UsageError("--order must be nonnegative")
    else:
        if args.order is not None:
            raise UsageError(f"{fam.name} is exact; --order does not apply")
        order = None
    return fam.expand(values, order)


# ------------------------------------------------------------------ running

def _run(tasks: Sequence[Task], jobs: int, corrupt_index: int | None, ordered: bool) -> Iterator[VerificationReport]:
    flags = [i == corrupt_index for i in range(len(tasks))]
    if jobs <= 1:
        for t, c in zip(tasks, flags):
            yield run_task(t, c)
        return
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        futures = [pool.submit(run_task, t, c) for t, c in zip(tasks, flags)]
        stream: Iterable = futures if ordered else as_completed(futures)
        for f in stream:
            yield f.result()
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def cmd_verify(args: argparse.Namespace, out, err) -> int:
    fam = FAMILIES[args.family]
    tasks = build_tasks(fam, args)
    if args.self_test is not None and not 0 <= args.self_test < len(tasks):
        raise UsageError(f"--self-test index {args.self_test} outside 0..{len(tasks) - 1}")
    if args.format == "tsv":
        print(TSV_HEADER, file=out)
    counts = {"pass": 0, "fail": 0, "invalid": 0}
    reports = _run(tasks, args.jobs, args.self_test, ordered=args.sorted)
    try:
        for r in reports:
            counts[r.status] += 1
            print(format_report(r, args.format), file=out, flush=True)
            if args.fail_fast and not r.ok:
                break
    finally:
        close = getattr(reports, "close", None)
        if close:
            close()
    total = sum(counts.values())
    summary = f"{fam.name}: {total} reports, {counts['pass']} pass, {counts['fail']} fail, {counts['invalid']} invalid"
    print(summary, file=out if args.format == "human" else err)
    return 0 if counts["pass"] == total else 1


def cmd_expand(args: argparse.Namespace, out, err) -> int:
    from .qpoch import q_binomial
    from .schur import Flavor, partial_theta, schur, szego

    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise UsageError(f"expand {args.object} needs " + ", ".join(f"--{n}" for n in missing))

    obj = args.object
    if obj in ("e", "d"):
        need("n")
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        poly = schur(Flavor.E if obj == "e" else Flavor.D, args.n)
    elif obj == "K":
        need("n", "t")
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        poly = szego(args.n, args.t)
    elif obj == "theta":
        need("n", "k", "c")
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        try:
            poly = partial_theta(args.n, args.k, args.c)
        except ArithmeticError as exc:
            raise UsageError(str(exc)) from exc
    else:
        need("n", "m")
        poly = q_binomial(args.n, args.m)
    print(poly, file=out)
    return 0


def _family_entry(fam: Family) -> dict:
    entry = {"family": fam.name, "anchor": fam.anchor, "params": fam.schema(),
             "kind": "series" if fam.is_series else "exact"}
    if fam.is_series:
        entry["default_order"] = fam.default_order
    if fam.fixed:
        entry["fixed"] = dict(fam.fixed)
    return entry


def cmd_list(args: argparse.Namespace, out, err) -> int:
    fams = [FAMILIES[args.family]] if args.family else list(FAMILIES.values())
    if args.format == "tsv":
        print("family\tkind\tparams\tanchor", file=out)
    for fam in fams:
        e = _family_entry(fam)
        if args.format == "json":
            print(json.dumps(e, separators=(",", ":")), file=out)
        elif args.format == "tsv":
            print(f"{fam.name}\t{e['kind']}\t{_params_text(e['params'])}\t{fam.anchor}", file=out)
        else:
            print(f"{fam.name:<18} {e['kind']:<6} {_params_text(e['params']):<34} {fam.anchor}", file=out)
    return 0


# ------------------------------------------------------------------ parser

def _int_or_sign(text: str) -> int:
    t = text.strip()
    if t in ("+", "pos", "positive"):
        return 1
    if t in ("-", "neg", "negative"):
        return -1
    return int(t)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qrr", description="Exact verification of partial Rogers-Ramanujan identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a family over a parameter grid")
    v.add_argument("family", choices=sorted(FAMILIES))
    v.add_argument("--n-max", type=int)
    v.add_argument("--m-max", type=int)
    v.add_argument("--order", type=int, help="series truncation order N")
    v.add_argument("--grid", help='ranges, e.g. "m=-4..4,n=-4..4"')
    for name in param_names():
        v.add_argument(f"--{name}", dest=f"p_{name}", type=_int_or_sign if name == "sign" else int,
                       metavar="INT", help=f"pin {name}")
    v.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--sorted", action="store_true", help="canonical order with --jobs > 1")
    v.add_argument("--self-test", nargs="?", type=int, const=0, metavar="INDEX",
                   help="corrupt one exponent of the INDEX-th instance (default 0)")

    e = sub.add_parser("expand", help="print the expansion of a named object")
    e.add_argument("object", choices=EXPAND_OBJECTS)
    for name in ("n", "k", "c", "t", "m"):
        e.add_argument(f"--{name}", type=int)

    ls = sub.add_parser("list", help="show the family catalogue")
    ls.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    ls.add_argument("--family", choices=sorted(FAMILIES))
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("qrr: error: --jobs must be at least 1", file=err)
        return 2
    handler = {"verify": cmd_verify, "expand": cmd_expand, "list": cmd_list}[args.command]
    try:
        return handler(args, out, err)
    except UsageError as exc:
        print(f"qrr: error: {exc}", file=err)
        return 2


def console() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        import os
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 1
    sys.exit(code)
