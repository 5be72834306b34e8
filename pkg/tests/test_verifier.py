import json

import pytest

from hyperxf.catalog import get_entry, instantiate
from hyperxf.errors import HyperError, UnknownEntry
from hyperxf.verifier import (
    SamplingError,
    VerifyConfig,
    report_to_json,
    sample_env,
    thread_count,
    verify_all,
    verify_entry,
)


def test_config_defaults():
    c = VerifyConfig()
    assert (c.samples, c.n_max, c.ps_order, c.max_rejects, c.soft_terms) == (25, 5, 12, 1000, 200000)
    assert c.numerator_range == (-9, 9) and c.denominator_set == (1, 2, 3, 4, 5)
    with pytest.raises(HyperError):
        VerifyConfig(samples=0)
    with pytest.raises(HyperError):
        VerifyConfig(n_max=-1)


def test_sample_env_deterministic():
    cfg = VerifyConfig(seed=11)
    e = get_entry("prop-13P3")
    assert sample_env(e, 3, cfg) == sample_env(e, 3, cfg)
    assert sample_env(e, 3, cfg) != sample_env(e, 4, cfg)


def test_sample_env_constraints():
    cfg = VerifyConfig(seed=1)
    inst = instantiate("prop-12P2", sample_env(get_entry("prop-12P2"), 0, cfg).with_n(4))
    v = inst.values
    assert v.d + v.e + v.f - v.a - v.b - v.c + 4 == 3
    for i in range(10):
        env = sample_env(get_entry("cor-3C6P1"), i, cfg)
        assert env["a"].denominator == 1 and 2 * env["q"] != env["a"]


def test_extra_lists_cover_all_lengths():
    cfg = VerifyConfig(seed=2)
    seen = set()
    for i in range(9):
        b = sample_env(get_entry("prop-13P1"), i, cfg).as_dict()
        seen.add((sum(k.startswith("a_") for k in b), sum(k.startswith("b_") for k in b)))
        assert "x" in b
    assert seen == {(r, s) for r in range(3) for s in range(3)}


def test_sampling_exhaustion():
    cfg = VerifyConfig(numerator_range=(0, 0), denominator_set=(1,), max_rejects=5)
    with pytest.raises(SamplingError, match="no admissible sample found"):
        sample_env(get_entry("prop-3P16"), 0, cfg)
    rep = verify_entry("prop-3P16", VerifyConfig(numerator_range=(0, 0), denominator_set=(1,),
                                                  max_rejects=5, samples=2))
    assert rep["summary"] == {"passes": 0, "fails": 0, "rejects": 2}
    assert all(r["reason"] for r in rep["records"])


def test_verify_examples():
    rep = verify_entry("sum-ext-chu-vandermonde")
    assert rep["summary"]["fails"] == 0 and rep["summary"]["passes"] == 25 * 6
    rep = verify_entry("prop-13P3", VerifyConfig(samples=10, n_max=4))
    assert rep["summary"] == {"passes": 50, "fails": 0, "rejects": 0}
    with pytest.raises(UnknownEntry):
        verify_entry("bogus")


def test_records_carry_structural_checks():
    rep = verify_entry("prop-12P2", VerifyConfig(samples=2, n_max=1))
    for r in rep["records"]:
        assert r["structural"]["checked"] == ["lhs:saalschutzian", "rhs:saalschutzian"]
        assert r["structural"]["failed"] == []


def test_n_max_zero_all_pass():
    cfg = VerifyConfig(samples=2, n_max=0, seed=5)
    for rep in verify_all(cfg, workers=1):
        if rep["check_mode"] == "exact":
            assert rep["summary"]["passes"] == 2 and rep["summary"]["fails"] == 0


def test_parallel_matches_serial():
    cfg = VerifyConfig(samples=2, n_max=1, seed=9)
    assert report_to_json(verify_all(cfg, workers=1)) == report_to_json(verify_all(cfg, workers=3))


def test_report_is_canonical_json():
    text = report_to_json(verify_entry("eq-1e6", VerifyConfig(samples=2)))
    data = json.loads(text)
    assert set(data) >= {"entry", "config", "records", "summary"}
    assert data["config"]["soft_rel_tol"] == "1/100"
    for rec in data["records"]:
        assert all("/" in v for v in rec["env"].values())
    assert text == json.dumps(data, sort_keys=True, indent=2) + "\n"


def test_thread_env(monkeypatch):
    monkeypatch.setenv("HYPERXF_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("HYPERXF_THREADS", "many")
    with pytest.raises(HyperError):
        thread_count()
