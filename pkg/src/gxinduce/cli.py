"""``gxi``: validate instance files, induce sectors, run theorem suites."""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Optional, Sequence

from . import catalog
from .induction import (
    InductionError,
    alpha_minus,
    alpha_plus,
    check_half_braiding,
    find_twisted_reps,
    hom_dim,
    hom_space,
)
from .io import Instance, ParseError, SchemaError, ValidationError, dumps, encode, load, validate_instance
from .reports import CheckReport
from .theorems import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _table(rows: list[Sequence[Any]], header: Sequence[str]) -> str:
    cells = [[str(h) for h in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _report_rows(reports: list[CheckReport]) -> list[list]:
    rows = []
    for rep in reports:
        for r in rep.results:
            wit = "" if r.witness is None else json.dumps(r.to_json().get("witness"))
            rows.append([rep.suite, r.check_id, "pass" if r.passed else "FAIL", r.count, wit])
    return rows


def _resolve(path_or_name: str) -> Path:
    p = Path(path_or_name)
    if p.exists():
        return p
    try:
        return catalog.entry_path(path_or_name)
    except KeyError:
        raise UsageError(f"no such file or catalog entry: {path_or_name}") from None


def _load(args) -> Instance:
    return load(_resolve(args.file), approx=args.approx, tol=args.tol, validate=False)


def _setting(inst: Instance, name: Optional[str]):
    try:
        st = inst.setting(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if st.induction is None:
        raise UsageError(f"setting {st.name!r} is Q-system only and cannot be used for induction")
    return st.induction


def _base_report(cmd: str, args, inst: Optional[Instance]) -> dict:
    return {
        "command": cmd,
        "input": inst.name if inst else None,
        "mode": "approx" if getattr(args, "approx", False) else "exact",
    }


def _maybe_validate(args, inst: Instance, out: dict) -> bool:
    if args.no_validate:
        return True
    rep = validate_instance(inst)
    out.setdefault("suites", []).append(rep.to_json())
    if not rep.passed or args.cmd in ("induce", "theorems"):
        out.setdefault("_reports", []).append(rep)
    return rep.passed


def cmd_validate(args, inst: Instance, out: dict) -> bool:
    rep = validate_instance(inst)
    reports = [rep]
    if inst.expected:
        reports.append(catalog.self_test(inst))
    out["suites"] = [r.to_json() for r in reports]
    out["_reports"] = reports
    return all(r.passed for r in reports)


def cmd_induce(args, inst: Instance, out: dict) -> bool:
    if not _maybe_validate(args, inst, out):
        return False
    S = _setting(inst, args.setting)
    if args.chirality == "+":
        if args.g is None:
            raise UsageError("--g is required for chirality +")
        A = alpha_plus(S, args.g, args.lam)
    else:
        A = alpha_minus(S, args.lam)
    rep = check_half_braiding(S, A)
    end = hom_space(S, A, A)
    out["sector"] = {
        "label": A.label(),
        "chirality": A.chirality,
        "g": A.g,
        "lambda": args.lam,
        "end_dim": len(end),
        "end_dim_formula": hom_dim(S, args.lam, args.lam),
        "half_braiding": {c: [[str(v) for v in row] for row in m.data] for c, m in sorted(A.e.blocks.items())},
    }
    out["suites"] = out.get("suites", []) + [rep.to_json()]
    out.setdefault("_reports", []).append(rep)
    out["_text"] = [
        f"{A.label()}  dim End = {len(end)} (fusion {hom_dim(S, args.lam, args.lam)})",
        _table(
            [[c, "; ".join(" ".join(str(v) for v in row) for row in m.data)] for c, m in sorted(A.e.blocks.items())],
            ["block", "half-braiding"],
        ),
    ]
    return rep.passed and len(end) == hom_dim(S, args.lam, args.lam)


def cmd_homdim(args, inst: Instance, out: dict) -> bool:
    if not _maybe_validate(args, inst, out):
        return False
    S = _setting(inst, args.setting)
    ch = args.chirality
    if ch in ("+", "mixed") and args.g is None:
        raise UsageError("--g is required for chiralities + and mixed")
    if ch == "+":
        A, B = alpha_plus(S, args.g, args.lam), alpha_plus(S, args.g, args.mu)
    elif ch == "-":
        A, B = alpha_minus(S, args.lam), alpha_minus(S, args.mu)
    else:
        A, B = alpha_plus(S, args.g, args.lam), alpha_minus(S, args.mu)
    dim = len(hom_space(S, A, B))
    row = {"chirality": ch, "g": args.g, "lambda": args.lam, "mu": args.mu, "dim": dim}
    ok = True
    if ch != "mixed":
        row["formula"] = hom_dim(S, args.lam, args.mu)
        ok = row["formula"] == dim
    else:
        row["source"] = "solver"
    out["homdim"] = row
    out["_text"] = [str(dim)]
    return ok


def cmd_sectors(args, inst: Instance, out: dict) -> bool:
    if not _maybe_validate(args, inst, out):
        return False
    S = _setting(inst, args.setting)
    if args.g not in S.group.elements:
        raise UsageError(f"unknown group element {args.g!r}")
    mods = find_twisted_reps(S, args.g)
    rows = []
    for i, m in enumerate(mods):
        sm = m.summary()
        rows.append({"index": i, **sm, "representative": sm["lambda"]})
    out["sectors"] = {"g": args.g, "count": len(mods), "modules": rows}
    out["_text"] = [
        f"{len(mods)} irreducible {args.g}-twisted sector(s)",
        _table(
            [[r["index"], r["representative"], r["mu"], r["sigma"], ",".join(r["plus_presentations"]), ",".join(r["minus_presentations"])] for r in rows],
            ["#", "lambda", "mu", "sigma", "plus presentations", "minus presentations"],
        ),
    ]
    return True


def cmd_theorems(args, inst: Instance, out: dict) -> bool:
    if not _maybe_validate(args, inst, out):
        return False
    S = _setting(inst, args.setting)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reps = run_suites(S, names)
    out["suites"] = out.get("suites", []) + [r.to_json() for r in reps]
    out.setdefault("_reports", []).extend(reps)
    return all(r.passed for r in out["_reports"])


def cmd_catalog(args, out: dict) -> bool:
    if args.action == "list":
        names = catalog.list_entries(large=True)
        out["entries"] = names
        out["_text"] = names
        return True
    if not args.name or not args.path:
        raise UsageError("catalog export needs <name> <path>")
    try:
        src = catalog.entry_path(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    inst = load(src, validate=True)
    text = dumps(encode(inst))
    Path(args.path).write_text(text, encoding="utf-8")
    out["exported"] = {"name": args.name, "path": str(args.path)}
    out["_text"] = [f"wrote {args.path}"]
    return True


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON report on stdout")
    common.add_argument("--approx", action="store_true", help="complex floating point instead of exact arithmetic")
    common.add_argument("--tol", type=float, default=1e-9, help="zero tolerance in approximate mode")
    common.add_argument("--setting", default=None, help="setting name (default: first induction setting)")
    common.add_argument("--no-validate", action="store_true", help="skip structural validation on load")

    p = _Parser(prog="gxi", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = sub.add_parser("validate", parents=[common], help="run every structural validator")
    sp.add_argument("file")
    sp = sub.add_parser("induce", parents=[common], help="build an induced sector")
    sp.add_argument("file")
    sp.add_argument("--g", default=None)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--chirality", choices=["+", "-"], default="+")
    sp = sub.add_parser("homdim", parents=[common], help="dimension of an intertwiner space")
    sp.add_argument("file")
    sp.add_argument("--g", default=None)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--chirality", choices=["+", "-", "mixed"], default="+")
    sp = sub.add_parser("sectors", parents=[common], help="irreducible twisted sectors")
    sp.add_argument("file")
    sp.add_argument("--g", required=True)
    sp = sub.add_parser("theorems", parents=[common], help="run theorem suites")
    sp.add_argument("file")
    sp.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    sp = sub.add_parser("catalog", parents=[common], help="list or export catalog entries")
    sp.add_argument("action", choices=["list", "export"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("path", nargs="?")
    return p


COMMANDS = {
    "validate": cmd_validate,
    "induce": cmd_induce,
    "homdim": cmd_homdim,
    "sectors": cmd_sectors,
    "theorems": cmd_theorems,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    as_json = "--json" in (argv if argv is not None else sys.argv[1:])
    t0 = time.perf_counter()
    out: dict = {}
    try:
        args = parser.parse_args(argv)
        as_json = args.json
        if args.cmd == "catalog":
            out = {"command": "catalog", "mode": "exact"}
            ok = cmd_catalog(args, out)
        else:
            inst = _load(args)
            out = _base_report(args.cmd, args, inst)
            if args.setting is not None or args.cmd != "validate":
                out["setting"] = args.setting
            ok = COMMANDS[args.cmd](args, inst, out)
    except UsageError as exc:
        return _error(as_json, "usage", str(exc))
    except (ParseError, SchemaError) as exc:
        return _error(as_json, "parse", str(exc))
    except ValidationError as exc:
        return _finish(as_json, {"error": "validation", "message": str(exc), "suites": [exc.report.to_json()], "_reports": [exc.report]}, False, t0)
    except InductionError as exc:
        return _error(as_json, "usage", str(exc))
    return _finish(as_json, out, ok, t0)


def _error(as_json: bool, kind: str, msg: str) -> int:
    if as_json:
        sys.stdout.write(json.dumps({"error": kind, "message": msg, "passed": False}, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"gxi: {kind} error: {msg}\n")
    return EXIT_USAGE


def _finish(as_json: bool, out: dict, ok: bool, t0: float) -> int:
    reports = out.pop("_reports", [])
    text = out.pop("_text", None)
    out["passed"] = bool(ok)
    if as_json:
        sys.stdout.write(json.dumps(out, sort_keys=True, indent=1) + "\n")
    else:
        if reports:
            print(_table(_report_rows(reports), ["suite", "check", "result", "cases", "witness"]))
        if text:
            for line in text:
                print(line)
        if reports:
            print(f"{'PASS' if ok else 'FAIL'}  ({time.perf_counter() - t0:.2f} s)")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
