import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout

from hypothesis import given, settings, strategies as st

from hyperxf.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = run(list(argv))
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def _spec_file(tmp_path, data):
    path = tmp_path / "f.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_eval_terminating(tmp_path):
    f = _spec_file(tmp_path, {"upper": ["-2/1", "1/1"], "lower": ["1/1"], "upper_pairs": [],
                              "lower_pairs": [], "arg": "1/3", "mode": {"terminating": 2}})
    code, out, _ = call("eval", "--spec", f)
    assert code == 0 and out.strip() == "4/9"


def test_eval_formal_and_partial(tmp_path):
    f = _spec_file(tmp_path, {"upper": ["1/2"], "lower": [], "arg": "x", "mode": {"formal": 2}})
    assert call("eval", "--spec", f)[1].split() == ["1/1", "1/2", "3/8"]
    g = _spec_file(tmp_path, {"upper": ["1/1"], "lower": [], "arg": "1/2", "mode": {"partial": 4}})
    assert json.loads(call("eval", "--spec", g, "--format", "json")[1]) == {
        "value": "15/8", "last_term": "1/8"}


def test_eval_bad_inputs(tmp_path):
    assert call("eval", "--spec", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("eval", "--spec", str(bad))[0] == 2
    assert call("eval", "--spec", _spec_file(tmp_path, {"upper": []}))[0] == 2


def test_verify_json():
    code, out, _ = call("verify", "--id", "prop-12P2", "--seed", "42", "--format", "json")
    assert code == 0
    assert json.loads(out)["summary"]["fails"] == 0


def test_verify_unknown_and_usage():
    assert call("verify", "--id", "bogus")[0] == 2
    assert call("verify")[0] == 2
    assert call("explain", "--id", "bogus")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call()[0] == 2


def test_failing_soft_entry_exits_one():
    assert call("verify", "--id", "cor-3C6P1", "--samples", "3")[0] == 1


def test_list_and_explain():
    code, out, _ = call("list")
    assert code == 0 and "prop-3P16" in out and "cor-3C6P1" in out
    rows = json.loads(call("list", "--format", "json")[1])
    assert len(rows) >= 24
    code, out, _ = call("explain", "--id", "prop-13P3")
    assert code == 0 and "[7e13P3]" in out and "eps_sq" in out


def test_out_file(tmp_path):
    target = tmp_path / "r.json"
    assert call("verify", "--id", "eq-1e6", "--samples", "2", "--format", "json",
                "--out", str(target))[0] == 0
    assert json.loads(target.read_text())["entry"] == "eq-1e6"
    assert call("list", "--out", str(tmp_path / "no" / "dir.txt"))[0] == 2


def test_byte_identical_json():
    args = ("verify", "--id", "prop-13P1", "--seed", "5", "--samples", "3", "--format", "json")
    assert call(*args)[1] == call(*args)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperxf", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "eq-3e6" in proc.stdout


IDS = ["sum-rr-formA", "eq-3e2C12P2", "cor-2C6P1", "bogus", ""]
FLAG = st.one_of(
    st.tuples(st.just("--seed"), st.sampled_from(["0", "7", "-3", "x"])),
    st.tuples(st.just("--samples"), st.sampled_from(["1", "2", "0", "-1", "two"])),
    st.tuples(st.just("--nmax"), st.sampled_from(["0", "2", "-1"])),
    st.tuples(st.just("--ps-order"), st.sampled_from(["3", "-2"])),
    st.tuples(st.just("--format"), st.sampled_from(["json", "text", "yaml"])),
    st.tuples(st.just("--bogus"), st.just("1")),
)
INVALID = {("--seed", "x"), ("--samples", "0"), ("--samples", "-1"), ("--samples", "two"),
           ("--nmax", "-1"), ("--ps-order", "-2"), ("--format", "yaml"), ("--bogus", "1")}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(IDS), st.lists(FLAG, max_size=3, unique_by=lambda f: f[0]))
def test_exit_code_contract(entry_id, flags):
    argv = ["verify"] + (["--id", entry_id] if entry_id else [])
    for f in flags:
        argv.extend(f)
    code, out, _ = call(*argv)
    if not entry_id or entry_id == "bogus" or any(f in INVALID for f in flags):
        assert code == 2
    else:
        assert code == 0
