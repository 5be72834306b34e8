"""Seeded randomized verification of catalog entries.

Each sample gets its own RNG derived from ``sha256(seed:entry:index)`` so
results do not depend on evaluation order or on how work is split across
processes.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .arith import PowerSeries, rat_str
from .catalog import (
    EXACT,
    SOFT,
    IdentityEntry,
    ParamEnv,
    get_entry,
    instantiate,
    list_entries,
    residual,
)
from .errors import DegenerateError, HyperError

THREADS_ENV = "HYPERXF_THREADS"


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    samples: int = 25
    n_max: int = 5
    ps_order: int = 12
    numerator_range: Tuple[int, int] = (-9, 9)
    denominator_set: Tuple[int, ...] = (1, 2, 3, 4, 5)
    max_rejects: int = 1000
    soft_terms: int = 200000
    soft_rel_tol: Fraction = Fraction(1, 100)

    def __post_init__(self):
        if self.samples < 1:
            raise HyperError("samples must be >= 1")
        if self.n_max < 0:
            raise HyperError("n_max must be >= 0")
        if self.ps_order < 0:
            raise HyperError("ps_order must be >= 0")
        lo, hi = self.numerator_range
        if lo > hi or not self.denominator_set or min(self.denominator_set) < 1:
            raise HyperError("bad sampling ranges")
        object.__setattr__(self, "soft_rel_tol", Fraction(self.soft_rel_tol))

    def to_json(self) -> dict:
        d = asdict(self)
        d["numerator_range"] = list(self.numerator_range)
        d["denominator_set"] = list(self.denominator_set)
        d["soft_rel_tol"] = rat_str(self.soft_rel_tol)
        return d


class SamplingError(HyperError):
    def __init__(self, reason: str):
        super().__init__(f"no admissible sample found (last rejection: {reason})")
        self.reason = reason


def sample_rng(seed: int, entry_id: str, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{entry_id}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _draw(rng: random.Random, config: VerifyConfig, integer: bool = False) -> Fraction:
    num = rng.randint(*config.numerator_range)
    den = 1 if integer else rng.choice(config.denominator_set)
    return Fraction(num, den)


def _n_values(entry: IdentityEntry, config: VerifyConfig) -> range:
    return range(config.n_max + 1) if entry.check_mode == EXACT else range(1)


def sample_env(entry: IdentityEntry, index: int, config: VerifyConfig) -> ParamEnv:
    """Admissible environment for every n the entry will be checked at."""
    rng = sample_rng(config.seed, entry.id, index)
    reason = "none"
    for _ in range(config.max_rejects):
        bindings = {
            k: _draw(rng, config, k in entry.integer_params) for k in entry.free_params
        }
        if entry.extra_lists:
            r, s = index % 3, (index // 3) % 3
            for i in range(r):
                bindings[f"a_{i + 1}"] = _draw(rng, config)
            for i in range(s):
                bindings[f"b_{i + 1}"] = _draw(rng, config)
            bindings["x"] = _draw(rng, config)
        env = ParamEnv(bindings)
        try:
            for n in _n_values(entry, config):
                instantiate(entry.id, env.with_n(n), config.ps_order)
        except DegenerateError as exc:
            reason = exc.reason
            continue
        return env
    raise SamplingError(reason)


def _jsonable(v):
    if isinstance(v, Fraction):
        return rat_str(v)
    if isinstance(v, list):
        return [_jsonable(u) for u in v]
    return v


def _residual_summary(res) -> Tuple[bool, object]:
    if isinstance(res, Fraction):
        return res == 0, rat_str(res)
    if isinstance(res, PowerSeries):
        nz = [i for i, c in enumerate(res.coeffs) if c]
        if not nz:
            return True, {"zero_to_order": res.order}
        i = nz[0]
        return False, {"first_nonzero_order": i, "coefficient": rat_str(res.coeffs[i])}
    value, diag = res
    summary = {k: _jsonable(v) for k, v in diag.items()}
    summary["discrepancy"] = rat_str(value)
    summary["exact"] = False
    return bool(diag["pass"]), summary


def _check(entry: IdentityEntry, env: ParamEnv, config: VerifyConfig) -> dict:
    record = {"n": env.n, "env": env.to_json()["bindings"]}
    try:
        inst = instantiate(entry.id, env, config.ps_order)
        res = residual(inst, config.soft_terms, config.soft_rel_tol)
    except DegenerateError as exc:
        record.update(status="rejected", reason=exc.reason, residual=None)
        return record
    ok, summary = _residual_summary(res)
    record["derived"] = {d.name: rat_str(inst.values[d.name]) for d in entry.derived_params}
    record["residual"] = summary
    structural = inst.structural_failures()
    record["structural"] = {
        "checked": [f"{s}:{f}" for s, f in entry.structural_flags],
        "failed": structural,
    }
    if not ok:
        record.update(status="fail", reason="nonzero residual")
    elif structural:
        record.update(status="fail", reason="structural: " + ", ".join(structural))
    else:
        record.update(status="pass", reason=None)
    return record


def verify_entry(entry_id: str, config: VerifyConfig = VerifyConfig()) -> dict:
    entry = get_entry(entry_id)
    records: List[dict] = []
    for i in range(config.samples):
        try:
            env = sample_env(entry, i, config)
        except SamplingError as exc:
            records.append({"sample": i, "n": None, "env": None, "status": "rejected",
                            "reason": exc.reason, "residual": None})
            continue
        for n in _n_values(entry, config):
            rec = _check(entry, env.with_n(n), config)
            rec["sample"] = i
            records.append(rec)
    counts = {s: sum(r["status"] == s for r in records) for s in ("pass", "fail", "rejected")}
    return {
        "entry": entry.id,
        "paper_eq": entry.paper_eq,
        "check_mode": entry.check_mode,
        "exact": entry.check_mode != SOFT,
        "config": config.to_json(),
        "records": records,
        "summary": {"passes": counts["pass"], "fails": counts["fail"],
                    "rejects": counts["rejected"]},
    }


def _worker(args):
    entry_id, config = args
    return verify_entry(entry_id, config)


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise HyperError(f"{THREADS_ENV} must be an integer") from None
    return os.cpu_count() or 1


def verify_all(config: VerifyConfig = VerifyConfig(), workers: Optional[int] = None,
               include_cross_checks: bool = True) -> List[dict]:
    """One report per catalog entry, followed by the cross-check suite."""
    ids = [e.id for e in list_entries(include_cross_checks)]
    workers = thread_count() if workers is None else workers
    jobs = [(i, config) for i in ids]
    if workers <= 1:
        return [_worker(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_worker, jobs))


def total_fails(reports: List[dict]) -> int:
    return sum(r["summary"]["fails"] for r in reports)


def _default(obj):
    if isinstance(obj, Fraction):
        return rat_str(obj)
    raise TypeError(f"not serializable: {type(obj).__name__}")


def report_to_json(report) -> str:
    """Canonical serialization: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, default=_default) + "\n"


def report_to_text(reports: List[dict]) -> str:
    lines = []
    for r in reports:
        s = r["summary"]
        tag = "" if r["exact"] else " (heuristic)"
        lines.append(f"{r['entry']:28} {r['check_mode']:6} pass={s['passes']:<4} "
                     f"fail={s['fails']:<4} rejected={s['rejects']}{tag}")
        for rec in r["records"]:
            if rec["status"] == "fail":
                lines.append(f"    FAIL sample={rec['sample']} n={rec['n']} env={rec['env']} "
                             f"reason={rec['reason']}")
    fails = total_fails(reports)
    lines.append(f"total fails: {fails}")
    return "\n".join(lines) + "\n"
