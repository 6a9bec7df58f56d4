"""Command line: ``skewcoh verify | chains | export``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebras import build_A, presentation_A, presentation_B, presentation_S, unipotent_action, smash_presentation
from .anick import chains
from .barcoh import DEFAULT_BUDGET_MB
from .ffmat import PrimeField
from .verify import SUITES, Settings, build_report

EXPORTS = {
    "A": presentation_A,
    "B": presentation_B,
    "S": presentation_S,
    "smash": lambda p: smash_presentation(presentation_A(p), unipotent_action(p)),
}


def prime_arg(text: str) -> int:
    try:
        return PrimeField(int(text)).p
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid p {text!r}: {exc}") from None


def positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewcoh", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--p", type=prime_arg, default=3)
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-degree", type=positive_int, default=8)
    v.add_argument("--budget-mb", type=float, default=DEFAULT_BUDGET_MB)
    v.add_argument("--format", choices=("json", "table"), default="table")
    v.add_argument("--out", type=Path)
    v.add_argument("--strict", action="store_true", help="treat skipped checks as failures")
    v.add_argument("--jobs", type=positive_int, default=1)
    v.add_argument("--seed", type=int, default=Settings.seed)

    c = sub.add_parser("chains", help="list the Anick n-chains of A_p")
    c.add_argument("--p", type=prime_arg, default=3)
    c.add_argument("--n", type=int, required=True)

    e = sub.add_parser("export", help="write a presentation file")
    e.add_argument("name", choices=sorted(EXPORTS))
    e.add_argument("p", type=prime_arg)
    e.add_argument("path", type=Path)
    return ap


def format_table(data: dict) -> str:
    meta = data["metadata"]
    lines = [f"p = {meta['p']}  max-degree = {meta['max_degree']}  budget = {meta['budget_mb']} MB"
             f"  backend = {meta['backend']}"]
    for sec in data["sections"]:
        lines.append("")
        lines.append(f"[{sec['suite']}]")
        for chk in sec["checks"]:
            shown = chk["computed"] if chk["status"] != "skipped" else chk["detail"]
            lines.append(f"  {chk['status'].upper():7} {chk['provenance']:7} {chk['name']}")
            lines.append(f"          expected: {json.dumps(chk['expected'], sort_keys=True)}")
            lines.append(f"          computed: {json.dumps(shown, sort_keys=True)}")
    s = data["summary"]
    lines.append("")
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.p > 7:
        print(f"warning: p = {args.p} is beyond desk scale; expect budget refusals", file=sys.stderr)
    suites = SUITES if args.suite == "all" else (args.suite,)
    st = Settings(p=args.p, max_degree=args.max_degree, budget_mb=args.budget_mb, seed=args.seed)
    rep = build_report(suites, st, jobs=args.jobs)
    data = rep.to_dict()
    if args.format == "json":
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        text = format_table(data)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if rep.ok(strict=args.strict) else 1


def cmd_chains(args) -> int:
    if args.n < 0:
        raise SystemExit("n must be non-negative")
    A = build_A(args.p)
    cs = chains(A.gb, args.n)
    print(f"C_{args.n} for A_{args.p}: {len(cs)} chains")
    for label in cs.format(A.names):
        print(label)
    return 0


def cmd_export(args) -> int:
    pres = EXPORTS[args.name](args.p)
    pres.write(args.path)
    print(f"wrote {pres.name} (p = {args.p}) to {args.path}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"verify": cmd_verify, "chains": cmd_chains, "export": cmd_export}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
