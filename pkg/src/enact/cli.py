"""Command-line front end.

Exit codes: 0 strong (or success), 2 weak, 3 not enactable, 1 usage,
input or budget errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from pathlib import Path

from .comm import CommModel, filter_cm
from .distribution import project, sem_dist
from .enactability import Result, check, check_budget, default_budget, matrix
from .errors import EnactError, UnknownAgent
from .moi import MOI_COLUMNS, Moi, sem_moi
from .parser import ProtocolFile, ValidationError, parse, pretty
from .semantics import sem
from .terms import agents_of, canonical, interactions_of, show_trace

EXIT = {Result.STRONG: 0, Result.WEAK: 2, Result.NO: 3}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def bundled_corpus() -> Path:
    return Path(str(resources.files("enact") / "corpus"))


def read_protocol(path: str) -> ProtocolFile:
    p = Path(path)
    if not p.exists() and p.parent.name == "corpus":
        # the shipped corpus is reachable as corpus/<name> from anywhere
        bundled = bundled_corpus() / p.name
        if bundled.exists():
            p = bundled
    try:
        text = p.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise EnactError(f"{path}: file not found") from None
    except OSError as exc:
        raise EnactError(f"{path}: {exc.strerror}") from None
    try:
        return parse(text)
    except ValidationError as exc:
        raise EnactError(f"{path}: {exc}") from None
    except SyntaxError as exc:
        raise EnactError(f"{path}:{exc}") from None


def _budget(args) -> int:
    return default_budget() if args.budget is None else args.budget


def cmd_check(args, out) -> int:
    pf = read_protocol(args.file)
    moi, cm = Moi.parse(args.moi), CommModel.parse(args.cm)
    verdict = check(pf.body, moi, cm, _budget(args))
    shown = verdict.witnesses[: args.witness] if args.witness else ()
    if args.format == "json":
        doc = {
            "protocol": pf.name,
            "moi": moi.value,
            "cm": cm.name,
            "verdict": verdict.value.value,
            "witnesses": [
                {"side": w.side.value, "trace": [str(e) for e in w.trace]} for w in shown
            ],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(verdict.value.value + "\n")
        for w in shown:
            out.write(f"  {w.side.value}: {show_trace(w.trace)}\n")
    return EXIT[verdict.value]


def render_matrix(name: str, grid: dict, fmt: str) -> str:
    models = list(CommModel)
    if fmt == "json":
        cells = [
            {"cm": cm.name, "moi": moi.value, "verdict": grid[cm, moi].value.value}
            for cm in models for moi in MOI_COLUMNS
        ]
        return json.dumps({"protocol": name, "cells": cells}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["cm"] + [m.value.lower() for m in MOI_COLUMNS])
        for cm in models:
            w.writerow([cm.name.lower()] + [grid[cm, moi].value.value for moi in MOI_COLUMNS])
        return buf.getvalue()
    lines = [f"protocol {name}", "CM   " + " ".join(m.value.ljust(4) for m in MOI_COLUMNS).rstrip()]
    for cm in models:
        lines.append(f"{cm.name}  " + " ".join(grid[cm, moi].glyph.ljust(4) for moi in MOI_COLUMNS).rstrip())
    return "\n".join(lines) + "\n"


def cmd_matrix(args, out) -> int:
    pf = read_protocol(args.file)
    grid = matrix(pf.body, _budget(args))
    out.write(render_matrix(pf.name, grid, args.format))
    return 0


def cmd_project(args, out) -> int:
    pf = read_protocol(args.file)
    agents = agents_of(pf.body)
    if args.agent not in agents:
        raise UnknownAgent(args.agent, agents)
    out.write(pretty(project(pf.body, args.agent), outer=False) + "\n")
    return 0


def cmd_sem(args, out) -> int:
    pf = read_protocol(args.file)
    tau = pf.body
    check_budget(tau, _budget(args))
    if args.dist:
        traces = sem_dist(tau)
    elif args.moi:
        traces = sem_moi(tau, Moi.parse(args.moi))
    else:
        traces = sem(tau)
    if args.cm:
        traces = filter_cm(CommModel.parse(args.cm), traces, interactions_of(tau))
    listing = canonical(traces)
    for t in listing[: args.limit]:
        out.write(show_trace(t) + "\n")
    out.write(f"{len(listing)} traces\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="enact", description="Enactability checks for agent interaction protocols.")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)
    mois = ["rs", "rr", "ss", "sr"]
    cms = [f"cm{i}" for i in range(1, 7)]

    def common(p):
        p.add_argument("file", help=".aip protocol file")
        p.add_argument("--budget", type=int, default=None,
                       help="maximum number of message events (default: $ENACT_BUDGET or 12)")

    p = sub.add_parser("check", help="decide enactability for one MOI and model")
    common(p)
    p.add_argument("--moi", choices=mois, type=str.lower, required=True)
    p.add_argument("--cm", choices=cms, type=str.lower, required=True)
    p.add_argument("--witness", type=int, default=0, metavar="N")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("matrix", help="verdicts for every model and MOI")
    common(p)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("project", help="print an agent's projection")
    p.add_argument("file")
    p.add_argument("--agent", required=True)
    p.set_defaults(func=cmd_project, budget=None)

    p = sub.add_parser("sem", help="list the traces of a semantics")
    common(p)
    p.add_argument("--moi", choices=mois, type=str.lower)
    p.add_argument("--cm", choices=cms, type=str.lower)
    p.add_argument("--dist", action="store_true", help="distributed semantics of the projections")
    p.add_argument("--limit", type=int, default=50, metavar="N")
    p.set_defaults(func=cmd_sem)
    return top


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if getattr(args, "witness", 0) < 0 or getattr(args, "limit", 0) < 0:
        err.write("enact: error: counts must be non-negative\n")
        return 1
    try:
        return args.func(args, out)
    except EnactError as exc:
        err.write(f"enact: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
