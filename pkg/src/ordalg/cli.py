"""Command-line front end.

    ordalg check <file> [--suite S] [--budget N] [--seed N] [--format text|records]
    ordalg eval <file> --expr "nu(f)"
    ordalg witness <file> --law entity:law

Exit codes: 0 all checks hold, 1 at least one counterexample, 2 input or
capacity error.  The records format emits one tab-separated line per
check: check-id, law, pass/fail, witness.
"""
from __future__ import annotations

import argparse
import re
import sys

from .errors import OrdalgError
from .report import fmt_witness
from .structures import check_law
from .suites import SUITES, run_suite
from .workspace import Workspace, parse


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="ordalg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run law suites over a workspace document")
    p_check.add_argument("file")
    p_check.add_argument("--suite", default=None, choices=SUITES + ("all",))
    p_check.add_argument("--budget", type=int, default=None)
    p_check.add_argument("--seed", type=int, default=None)
    p_check.add_argument("--format", default="text", choices=("text", "records"))

    p_eval = sub.add_parser("eval", help="evaluate a functional application")
    p_eval.add_argument("file")
    p_eval.add_argument("--expr", required=True)

    p_wit = sub.add_parser("witness", help="run one named law check and print its witness")
    p_wit.add_argument("file")
    p_wit.add_argument("--law", required=True)

    args = parser.parse_args(argv)
    try:
        text = _read(args.file)
        ws = parse(text)
        if args.command == "check":
            return _cmd_check(ws, args)
        if args.command == "eval":
            return _cmd_eval(ws, args)
        return _cmd_witness(ws, args)
    except OrdalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _cmd_check(ws: Workspace, args) -> int:
    defaults = ws.suite_defaults or {}
    suite = args.suite or (defaults.get("run", ["all"]))[0]
    budget = args.budget if args.budget is not None else defaults.get("budget", 20000)
    seed = args.seed if args.seed is not None else defaults.get("seed", 0)
    if args.suite is None and defaults.get("run") and len(defaults["run"]) > 1:
        codes, records = 0, []
        for s in defaults["run"]:
            code, recs = run_suite(ws, s, budget, seed)
            codes = max(codes, code)
            records.extend(recs)
    else:
        codes, records = run_suite(ws, suite, budget, seed)
    if args.format == "records":
        for rec in records:
            print(rec.as_record_line())
    else:
        for rec in records:
            print(rec.as_text())
        failed = sum(1 for r in records if not r.verdict.holds)
        print(f"{len(records)} checks, {failed} failed")
    return codes


_EXPR = re.compile(r"^\s*(\w+)\s*\(\s*(.+?)\s*\)\s*$")


def _cmd_eval(ws: Workspace, args) -> int:
    m = _EXPR.match(args.expr)
    if not m:
        raise OrdalgError(f"expression must look like name(function), got {args.expr!r}")
    name, arg = m.group(1), m.group(2)
    if name not in ws.functionals:
        raise OrdalgError(f"unknown functional {name!r}")
    nu = ws.functionals[name]
    if arg.startswith("{"):
        body = arg.strip()
        if not body.endswith("}"):
            raise OrdalgError("unterminated function literal")
        values = {}
        for piece in body[1:-1].split(","):
            if not piece.strip():
                continue
            if ":" not in piece:
                raise OrdalgError(f"bad function literal entry {piece!r}")
            x, v = piece.split(":", 1)
            values[x.strip()] = v.strip()
        f = nu.space.function(values)
    elif arg in ws.functions:
        f = ws.functions[arg]
    else:
        raise OrdalgError(f"unknown function {arg!r}")
    print(nu.value(f))
    return 0


def _cmd_witness(ws: Workspace, args) -> int:
    if ":" not in args.law:
        raise OrdalgError("--law must look like entity:law")
    entity, law = args.law.split(":", 1)
    if entity in ws.structures:
        verdict = check_law(ws.structures[entity], law)
    elif entity in ws.schemes and law.startswith("nonassoc"):
        from .sproduct import find_nonassoc_witness

        op = law.split("-", 1)[1] if "-" in law else "mul"
        result = find_nonassoc_witness(op, ws.schemes[entity])
        if result.found:
            a, b, c, left, right = result.witness
            print(f"witness: a={a} b={b} c={c}")
            print(f"  (a{op}b){op}c = {left}")
            print(f"  a{op}(b{op}c) = {right}")
            print(f"  differ at index {result.diff_index}")
            return 0
        print(f"exhausted after {result.tested} triples")
        return 1
    else:
        raise OrdalgError(f"unknown entity {entity!r}")
    if verdict.holds:
        print("holds")
        return 0
    print(f"witness: {fmt_witness(verdict.witness)}")
    return 1


if __name__ == "__main__":
    sys.exit(main())
