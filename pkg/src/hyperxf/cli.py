"""Command-line front end.

Exit codes: 0 when no record failed, 1 when any record failed, 2 for usage,
I/O or unknown-entry errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .arith import rat_str
from .catalog import explain, list_entries
from .errors import HyperError, UnknownEntry
from .series import Formal, Partial, SeriesSpec, Terminating, eval_formal, eval_partial, eval_terminating
from .verifier import (
    VerifyConfig,
    report_to_json,
    report_to_text,
    total_fails,
    verify_all,
    verify_entry,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperxf", description="Verify hypergeometric identities exactly.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    def verify_flags(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--samples", type=_positive, default=25)
        sp.add_argument("--nmax", type=_nonneg, default=5)
        sp.add_argument("--ps-order", type=_nonneg, default=12)

    common(sub.add_parser("list", help="list catalog entries"))
    v = sub.add_parser("verify", help="verify one entry")
    v.add_argument("--id", required=True)
    verify_flags(v)
    common(v)
    va = sub.add_parser("verify-all", help="verify every entry plus cross-checks")
    verify_flags(va)
    common(va)
    e = sub.add_parser("eval", help="evaluate a series spec given as JSON")
    e.add_argument("--spec", required=True)
    common(e)
    x = sub.add_parser("explain", help="show an entry's constraints and derived parameters")
    x.add_argument("--id", required=True)
    common(x)
    return p


def _list(fmt: str) -> str:
    rows = [e.summary() for e in list_entries()]
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=2) + "\n"
    lines = [f"{'id':28} {'eq':12} {'mode':6} free parameters"]
    for r in rows:
        lines.append(f"{r['id']:28} {r['paper_eq']:12} {r['check_mode']:6} "
                     + ", ".join(r["free_params"]))
    return "\n".join(lines) + "\n"


def _eval(path: str, fmt: str) -> str:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    spec = SeriesSpec.from_json(data)
    mode = spec.mode
    if isinstance(mode, Terminating):
        out = {"value": rat_str(eval_terminating(spec))}
        text = out["value"]
    elif isinstance(mode, Partial):
        value, last = eval_partial(spec)
        out = {"value": rat_str(value), "last_term": rat_str(last)}
        text = f"{out['value']} (last term {out['last_term']})"
    elif isinstance(mode, Formal):
        coeffs = [rat_str(c) for c in eval_formal(spec).coeffs]
        out = {"coeffs": coeffs}
        text = " ".join(coeffs)
    else:
        raise HyperError("spec has no evaluation mode")
    return (json.dumps(out, sort_keys=True) if fmt == "json" else text) + "\n"


def _explain(entry_id: str, fmt: str) -> str:
    info = explain(entry_id)
    if fmt == "json":
        return json.dumps(info, sort_keys=True, indent=2) + "\n"
    lines = [f"{info['id']}  [{info['paper_eq']}]  {info['title']}",
             f"  check mode: {info['check_mode']}",
             f"  free: {', '.join(info['free_params'])}"]
    if info["constraints"]:
        lines.append(f"  constraints: {info['constraints']}")
    for i, d in enumerate(info["derived_chain"], 1):
        eq = f"  [{d['eq']}]" if d["eq"] else ""
        lines.append(f"  {i}. {d['name']} = {d['formula']}{eq}")
    if info["structural_flags"]:
        lines.append(f"  structural: {', '.join(info['structural_flags'])}")
    if info["note"]:
        lines.append(f"  note: {info['note']}")
    return "\n".join(lines) + "\n"


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "list":
            text = _list(args.format)
        elif args.command == "eval":
            text = _eval(args.spec, args.format)
        elif args.command == "explain":
            text = _explain(args.id, args.format)
        else:
            config = VerifyConfig(seed=args.seed, samples=args.samples, n_max=args.nmax,
                                  ps_order=args.ps_order)
            if args.command == "verify":
                reports = [verify_entry(args.id, config)]
                payload = reports[0]
            else:
                reports = verify_all(config)
                payload = reports
            text = report_to_json(payload) if args.format == "json" else report_to_text(reports)
            code = EXIT_FAIL if total_fails(reports) else EXIT_OK
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except UnknownEntry as exc:
        print(f"hyperxf: unknown entry id {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        # HyperError is a ValueError; json decode errors land here too
        print(f"hyperxf: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


def main() -> None:
    sys.exit(run())
