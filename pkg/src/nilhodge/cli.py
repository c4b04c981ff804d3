"""Command line: ``nilhodge compute | verify | table``."""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from .algebra import RationalPoly
from .invariants import KINDS, InvariantRequest, IntegralityError, assemble
from .weyl import GroupDescriptor, parse_group

FORMATS = ("text", "latex", "json")


def _integral_terms(poly: RationalPoly) -> list[list]:
    out = []
    for mono, c in poly.sorted_terms():
        if not isinstance(c, int):
            raise IntegralityError(f"non-integer coefficient {c} in output")
        out.append([c, list(mono)])
    return out


def record(group: GroupDescriptor, r: int, kind: str, value, family=None, n=None) -> dict:
    """Structured output: ``poly`` is a list of ``[coeff, exponent-vector]`` pairs over ``vars``.

    Integer results (euler_char, total_dim) become a single constant term with ``vars == []``.
    """
    if family is None:
        if len(group.atoms) == 1 and group.quotient is None:
            family, n = group.atoms[0]
        else:
            family, n = str(group), group.torus_rank
    rec = {"family": family, "n": n, "r": r, "kind": kind}
    if not isinstance(value, RationalPoly):
        value = RationalPoly.const(value, ())
    rec["vars"] = list(value.vars)
    rec["poly"] = _integral_terms(value)
    return rec


def poly_from_record(rec: dict) -> RationalPoly:
    return RationalPoly(tuple(rec["vars"]), {tuple(e): c for c, e in rec["poly"]})


def render(value, fmt: str, group=None, r=None, kind=None) -> str:
    if fmt == "json":
        return json.dumps(record(group, r, kind, value), sort_keys=True)
    if isinstance(value, RationalPoly):
        _integral_terms(value)
        return value.to_latex() if fmt == "latex" else str(value)
    return str(value)


_EXOTIC_RE = re.compile(r"^\s*p\s*=\s*(\d+)\s*,\s*m\s*=\s*(\d+)\s*$")


def _parse_exotic(text: str) -> GroupDescriptor:
    mt = _EXOTIC_RE.match(text)
    if not mt:
        raise ValueError(f"invalid exotic spec {text!r} (expected p=<prime>,m=<int>)")
    from .exotic import is_prime

    p, m = int(mt.group(1)), int(mt.group(2))
    if not is_prime(p):
        raise ValueError(f"exotic spec {text!r}: p={p} is not prime")
    return GroupDescriptor.exotic(p, m)


def _int_range(text: str) -> list[int]:
    values: list[int] = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        if ".." in token:
            lo, hi = token.split("..")
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(token))
    return values


def _group_grid(text: str) -> list[tuple[str, int, GroupDescriptor]]:
    """``SL:2..4,Sp:4`` -> one descriptor per cell (composites like ``GL:3xGL:1`` allowed)."""
    cells = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        mt = re.match(r"^([A-Za-z]+):(\d+)\.\.(\d+)$", token)
        if mt:
            for n in range(int(mt.group(2)), int(mt.group(3)) + 1):
                g = parse_group(f"{mt.group(1)}:{n}")
                cells.append((g.atoms[0][0], n, g))
        else:
            g = parse_group(token)
            if len(g.atoms) == 1:
                cells.append((g.atoms[0][0], g.atoms[0][1], g))
            else:
                cells.append((str(g), g.torus_rank, g))
    return cells


def cmd_compute(args) -> int:
    if (args.group is None) == (args.exotic is None):
        raise ValueError("give exactly one of --group or --exotic")
    group = parse_group(args.group) if args.group else _parse_exotic(args.exotic)
    component = args.component or ("full" if group.quotient else "identity")
    req = InvariantRequest(
        group, args.r, args.kind, args.vars, args.of, component, args.order
    )
    print(render(assemble(req), args.format, group, args.r, args.kind))
    return 0


def cmd_verify(args) -> int:
    from . import verify

    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        start = time.perf_counter()
        (_, ok, detail), = verify.run([name], args.max_n, args.max_r)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail} ({time.perf_counter() - start:.2f}s)")
    return 1 if failed else 0


def cmd_table(args) -> int:
    cells = _group_grid(args.groups)
    ranks = _int_range(args.r)
    lines = []
    if args.format == "jsonl":
        lines.append(json.dumps({"format": "nilhodge-table", "kind": args.kind, "vars": args.vars, "version": 1}))
    else:
        lines.append("family\tn\tr\tkind\tpoly")
    for family, n, group in cells:
        for r in ranks:
            value = assemble(InvariantRequest(group, r, args.kind, args.vars, args.of))
            if args.format == "jsonl":
                lines.append(json.dumps(record(group, r, args.kind, value, family, n), sort_keys=True))
            else:
                lines.append(f"{family}\t{n}\t{r}\t{args.kind}\t{render(value, 'text')}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilhodge",
        description="Mixed Hodge polynomials of representation and character varieties of nilpotent groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one invariant")
    p.add_argument("--group", help="atoms joined by x, e.g. SL:4, Sp:4, GL:3xGL:1, T:2")
    p.add_argument("--exotic", help="SL(p)^m / Z_p as p=<prime>,m=<int>")
    p.add_argument("--r", type=int, required=True, help="abelian rank of the nilpotent group (>= 1)")
    p.add_argument("--kind", choices=KINDS, default="mu_rep")
    p.add_argument("--vars", choices=("xw", "tuv"), default="tuv")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--of", choices=("rep", "char"), default="rep",
                   help="variety that poincare/e_poly/euler_char/total_dim specialize")
    p.add_argument("--component", choices=("identity", "full"),
                   help="default: full for --exotic, identity otherwise")
    p.add_argument("--order", type=int, default=20, help="total (x, w)-degree cap for equivariant_mu")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run self-consistency suites")
    p.add_argument("--suite", default="all",
                   choices=("all", "weyl", "recursion", "gl-sl", "duality", "specializations",
                            "integrality", "hodge-tate", "paper-golden", "exotic"))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-r", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="write a table over a grid of groups and ranks")
    p.add_argument("--groups", required=True, help="e.g. SL:2..4,Sp:4 (empty for header only)")
    p.add_argument("--r", default="1..3", help="e.g. 1..3 or 1,2,5")
    p.add_argument("--kind", choices=KINDS, default="mu_rep")
    p.add_argument("--vars", choices=("xw", "tuv"), default="tuv")
    p.add_argument("--of", choices=("rep", "char"), default="rep")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"nilhodge {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
