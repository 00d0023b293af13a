"""Command-line entry point.

Exit codes: 0 found / holds / no violations, 1 absent / fails / violations,
2 usage or capability error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .conditions import UnknownConditionError, check_condition, parse_condition, parse_conditions
from .digraph import (
    CapabilityError,
    Digraph,
    DigraphError,
    from_structured,
    from_text,
    to_structured,
    to_text,
)
from .families import FAMILIES, FamilySpec, generate
from .harness import BudgetExhausted, hunt_counterexample, run_theorem_suite
from .insertion import constructive_bypass, good_cycle_scan
from .search import (
    SearchBudgetExceeded,
    find_cycle_of_length,
    find_dnk,
    find_ham_bypass,
    find_ham_cycle,
    find_ham_path,
    parse_certificate,
    verify_certificate,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

FAMILY_TAGS = {f.lower(): f for f in FAMILIES} | {"kstar": "CompleteKstar", "dn": "DnChords"}


class UsageError(Exception):
    pass


def _read_source(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path) as fh:
        return fh.read()


def parse_digraph(text: str) -> Digraph:
    """Digraph from the text format, or from its structured (JSON) equivalent."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DigraphError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
        return from_structured(data)
    return from_text(text)


def parse_orders(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        for sep in ("..", "-"):
            if sep in part:
                lo, hi = part.split(sep, 1)
                out.extend(range(int(lo), int(hi) + 1))
                break
        else:
            out.append(int(part))
    return out


def _arc_list(text: str) -> tuple[tuple[int, int], ...]:
    arcs = []
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        u, _, v = item.partition("-")
        arcs.append((int(u), int(v)))
    return tuple(arcs)


def cmd_gen(args, out: TextIO, stdin: TextIO) -> int:
    try:
        family = FAMILY_TAGS[args.family.lower()]
    except KeyError:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}") from None
    spec = FamilySpec(family, n=args.n, k=args.k, p=args.p, q=args.q,
                      b_arcs=_arc_list(args.b_arcs) if args.b_arcs else (), variant=args.variant)
    out.write(to_text(generate(spec)))
    return EXIT_OK


def cmd_check(args, out: TextIO, stdin: TextIO) -> int:
    D = parse_digraph(_read_source(args.input, stdin))
    code = EXIT_OK
    for token in args.condition.split(","):
        report = check_condition(D, parse_condition(token))
        out.write(report.to_text() + "\n")
        if not report.holds:
            code = EXIT_NO
    return code


def cmd_find(args, out: TextIO, stdin: TextIO) -> int:
    D = parse_digraph(_read_source(args.input, stdin))
    what = args.what
    method = None
    name, _, arg = what.partition(":")
    if name == "bypass":
        cert = find_ham_bypass(D, budget=args.budget)
    elif name == "hamcycle":
        cert = find_ham_cycle(D, budget=args.budget)
    elif name == "hampath":
        cert = find_ham_path(D, args.s, args.t, budget=args.budget)
    elif name == "cycle" and arg:
        cert = find_cycle_of_length(D, int(arg), budget=args.budget)
    elif name == "dnk" and arg:
        cert = find_dnk(D, int(arg), budget=args.budget)
    elif name == "good-cycle":
        cert = good_cycle_scan(D, budget=args.budget)
    elif name == "constructive":
        cert, method = constructive_bypass(D, budget=args.budget)
    else:
        raise UsageError(f"unknown search target {what!r}")
    suffix = f" method={method}" if method else ""
    if cert is None:
        out.write(f"absent{suffix}\n")
        return EXIT_NO
    out.write(cert.to_text() + suffix + "\n")
    return EXIT_OK


def cmd_verify_cert(args, out: TextIO, stdin: TextIO) -> int:
    D = parse_digraph(_read_source(args.input, stdin))
    if args.cert is not None:
        text = args.cert
    else:
        with open(args.cert_file) as fh:
            text = fh.read()
    # tolerate a trailing method tag from `find --what constructive`
    text = " ".join(t for t in text.split() if not t.startswith("method="))
    try:
        cert = parse_certificate(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = verify_certificate(D, cert)
    out.write("valid\n" if ok else "invalid\n")
    return EXIT_OK if ok else EXIT_NO


def _emit_verdict(verdict, fmt: str, out: TextIO) -> int:
    out.write(verdict.to_structured() + "\n" if fmt == "structured" else verdict.to_text())
    if not verdict.complete or verdict.unknown:
        return EXIT_UNKNOWN
    return EXIT_OK if not verdict.violations else EXIT_NO


def _check_mode(args) -> None:
    if args.mode == "sample" and (args.seed is None or args.count is None):
        raise UsageError("sample mode needs explicit --count and --seed")


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    _check_mode(args)
    verdict = run_theorem_suite(args.theorem, parse_orders(args.n), args.mode, count=args.count,
                                seed=args.seed, budget=args.budget, search_budget=args.search_budget,
                                arc_probability=args.arc_probability, dedupe_iso=args.dedupe_iso)
    return _emit_verdict(verdict, args.format, out)


def cmd_hunt(args, out: TextIO, stdin: TextIO) -> int:
    _check_mode(args)
    verdict = hunt_counterexample(parse_conditions(args.hypothesis), args.conclusion, parse_orders(args.n),
                                  args.mode, count=args.count, seed=args.seed, budget=args.budget,
                                  search_budget=args.search_budget, arc_probability=args.arc_probability,
                                  dedupe_iso=args.dedupe_iso)
    return _emit_verdict(verdict, args.format, out)


def cmd_convert(args, out: TextIO, stdin: TextIO) -> int:
    D = parse_digraph(_read_source(args.input, stdin))
    if args.to == "structured":
        out.write(json.dumps(to_structured(D)) + "\n")
    else:
        out.write(to_text(D))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hambypass", description="Hamiltonian bypass toolkit for small digraphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", "-i", default=None, help="digraph file (default: stdin)")
        return p

    p = sub.add_parser("gen", help="emit a named family member")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--variant", choices=("chain", "wrap"), default="chain")
    p.add_argument("--b-arcs", help="arcs inside B for D0, e.g. '3-4,4-3'")
    p.set_defaults(func=cmd_gen)

    p = with_input(sub.add_parser("check", help="evaluate degree conditions"))
    p.add_argument("--condition", required=True, help="comma-separated condition tokens")
    p.set_defaults(func=cmd_check)

    p = with_input(sub.add_parser("find", help="search for a substructure"))
    p.add_argument("--what", required=True,
                   help="bypass | hamcycle | hampath | cycle:k | dnk:k | good-cycle | constructive")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--budget", type=int, help="node-expansion budget")
    p.set_defaults(func=cmd_find)

    p = with_input(sub.add_parser("verify-cert", help="check a certificate against a digraph"))
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cert")
    g.add_argument("--cert-file")
    p.set_defaults(func=cmd_verify_cert)

    def with_run_flags(p):
        p.add_argument("--n", required=True, help="order or range, e.g. 4 or 4..5")
        p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
        p.add_argument("--count", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--budget", type=int, help="maximum number of instances examined")
        p.add_argument("--search-budget", type=int, help="node-expansion budget per search")
        p.add_argument("--arc-probability", type=float, default=0.5)
        p.add_argument("--dedupe-iso", action="store_true")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        return p

    p = with_run_flags(sub.add_parser("verify", help="verify a theorem over small digraphs"))
    p.add_argument("--theorem", required=True)
    p.set_defaults(func=cmd_verify)

    p = with_run_flags(sub.add_parser("hunt", help="search for counterexamples"))
    p.add_argument("--hypothesis", required=True, help="comma-separated condition tokens")
    p.add_argument("--conclusion", default="bypass")
    p.set_defaults(func=cmd_hunt)

    p = with_input(sub.add_parser("convert", help="convert between text and structured formats"))
    p.add_argument("--to", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out, stdin)
    except SearchBudgetExceeded:
        out.write("unknown\n")
        return EXIT_UNKNOWN
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (UsageError, UnknownConditionError, DigraphError, CapabilityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
