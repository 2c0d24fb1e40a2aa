import io
import json
import subprocess
import sys

import pytest

from qrr.cli import main
from qrr.registry import FAMILIES


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_thm_default_range_passes():
    code, out, _ = run("verify", "thm", "--n-max", "25")
    assert code == 0
    assert out.strip().splitlines()[-1] == "thm: 52 reports, 52 pass, 0 fail, 0 invalid"


def test_series_family_with_order():
    code, out, _ = run("verify", "fin", "--m", "1", "--order", "30", "--format", "json")
    assert code == 0
    (rep,) = json_lines(out)
    assert rep["params"] == {"m": 1} and rep["order"] == 30 and rep["status"] == "pass"


def test_json_schema_and_key_order():
    code, out, err = run("verify", "rrpoly", "--n-max", "2", "--format", "json")
    assert code == 0
    reps = json_lines(out)
    assert len(reps) == 6
    for r in reps:
        assert list(r) == ["family", "params", "order", "status", "mismatch", "elapsed_ms"]
        assert r["order"] is None and r["mismatch"] is None
        assert isinstance(r["elapsed_ms"], int)
    assert "6 reports" in err


def test_tsv_output():
    code, out, _ = run("verify", "aj", "--n-max", "1", "--format", "tsv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split("\t") == ["family", "params", "order", "status", "mismatch", "elapsed_ms"]
    assert len(lines) == 5
    assert all(l.split("\t")[3] == "pass" for l in lines[1:])


def test_usage_errors_exit_two():
    assert run("verify", "thm", "--n-max", "-1")[0] == 2
    assert run("verify", "thm", "--order", "10")[0] == 2
    assert run("verify", "lquad", "--grid", "m=1..")[0] == 2
    assert run("verify", "lquad", "--grid", "bogus=1..2")[0] == 2
    assert run("verify", "thm", "--n-max", "1", "--self-test", "99")[0] == 2
    assert run("verify", "nosuchfamily")[0] == 2


def test_invalid_instance_exits_one():
    code, out, _ = run("verify", "inverted", "--m", "-1", "--n", "0", "--i", "0", "--k", "0", "--order", "10")
    assert code == 1
    assert "invalid" in out


def test_self_test_corrupts_only_the_target():
    code, out, _ = run("verify", "symm", "--grid", "m=0..2,n=0..1,k=0..0", "--format", "json", "--self-test", "2")
    reps = json_lines(out)
    assert code == 1
    assert [r["status"] for r in reps] == ["pass", "pass", "fail", "pass", "pass", "pass"]
    mm = reps[2]["mismatch"]
    assert set(mm) == {"exponent", "lhs", "rhs"} and mm["lhs"] != mm["rhs"]


def test_fail_fast_stops_early():
    code, out, _ = run("verify", "thm", "--n-max", "5", "--self-test", "1", "--fail-fast", "--format", "json")
    assert code == 1
    assert len(json_lines(out)) == 2


def _strip_elapsed(reps):
    return [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in reps]


def test_parallel_sorted_matches_serial():
    args = ("verify", "lquad", "--grid", "m=0..2,n=-1..1,i=0..1,k=0..1", "--order", "15", "--format", "json")
    _, serial, _ = run(*args)
    _, parallel, _ = run(*args, "--jobs", "2", "--sorted")
    assert _strip_elapsed(json_lines(serial)) == _strip_elapsed(json_lines(parallel))
    _, again, _ = run(*args)
    assert _strip_elapsed(json_lines(serial)) == _strip_elapsed(json_lines(again))


def test_m_max_with_symmetric_default():
    code, out, _ = run("verify", "fin", "--m-max", "2", "--format", "json")
    assert code == 0
    assert [r["params"]["m"] for r in json_lines(out)] == [-2, -1, 0, 1, 2]


def test_sign_flag_accepts_symbols():
    code, out, _ = run("verify", "minimal", "--i", "1", "--j", "2", "--sign", "+", "--format", "json")
    assert code == 0
    (rep,) = json_lines(out)
    assert rep["params"] == {"i": 1, "j": 2, "sign": 1}


@pytest.mark.parametrize("argv,text", [
    (("e", "--n", "6"), "1 + q + q^2 + q^3 + 2q^4 + q^5 + q^6"),
    (("d", "--n", "1"), "0"),
    (("theta", "--n", "1", "--k", "0", "--c", "1"), "1 - q^2 - q^3"),
    (("qbin", "--n", "4", "--m", "2"), "1 + q + 2q^2 + q^3 + q^4"),
    (("K", "--n", "1", "--t", "0"), "1 + q^2"),
])
def test_expand(argv, text):
    code, out, _ = run("expand", *argv)
    assert code == 0 and out.strip() == text


def test_expand_missing_argument():
    assert run("expand", "theta", "--n", "1")[0] == 2
    assert run("expand", "theta", "--n", "1", "--k", "0", "--c", "2")[0] == 2


def test_list():
    code, out, _ = run("list")
    assert code == 0
    assert len(out.strip().splitlines()) == len(FAMILIES) == 28
    code, out, _ = run("list", "--format", "json")
    entries = json_lines(out)
    assert {e["family"] for e in entries} == set(FAMILIES)
    assert all(e["anchor"] for e in entries)
    code, out, _ = run("list", "--family", "gis", "--format", "json")
    (e,) = json_lines(out)
    assert e["kind"] == "series" and e["default_order"] == 50


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "qrr", "expand", "e", "--n", "3"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "1 + q"
