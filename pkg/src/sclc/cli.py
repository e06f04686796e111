"""Batch command-line front end.

Exit codes: 0 success/equal, 1 unequal/refuted, 2 usage or parse error,
3 internal invariant violation.  Output is deterministic for a given
argv and stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms, congruence, nandform, normalform, translate
from .congruence import FREE, MEM, Mode
from .errors import InvariantError, ParseError, SclError
from .normalform import render
from .syntax import parse, print_term


def _common_flags(p: argparse.ArgumentParser, dot: bool = False) -> None:
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--mem", action="store_true", help="memorising congruence (default)")
    mode.add_argument("--free", action="store_true", help="free congruence")
    p.add_argument("--three-valued", action="store_true",
                   help="admit U in axiom tables and enumerations")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--text", action="store_true", help="plain output (default)")
    out.add_argument("--json", action="store_true", help="JSON output")
    if dot:
        out.add_argument("--dot", action="store_true", help="Graphviz output")
    p.add_argument("--primes", action="store_true",
                   help="abbreviate x ~& T as x' in output")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="sclc", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="print the normal form of an expression")
    p.add_argument("expr")
    _common_flags(p, dot=True)

    p = sub.add_parser("eq", help="decide equivalence of two expressions")
    p.add_argument("expr")
    p.add_argument("expr2")
    _common_flags(p)

    p = sub.add_parser("dual", help="print the dual of an expression")
    p.add_argument("expr")
    _common_flags(p)

    p = sub.add_parser("eval", help="evaluate under a valuation")
    p.add_argument("expr")
    p.add_argument("--val", default="", metavar="a=0,b=1",
                   help="comma-separated atom assignments")
    _common_flags(p)

    p = sub.add_parser("to-nand", help="encode !,&&,|| into the NAND signature")
    p.add_argument("expr")
    _common_flags(p)

    p = sub.add_parser("from-nand", help="decode a NAND term into !,&&")
    p.add_argument("expr")
    _common_flags(p)

    p = sub.add_parser("munbf", help="NAND-signature normal form")
    p.add_argument("expr")
    _common_flags(p)

    p = sub.add_parser("tree", help="Graphviz view of the normal form")
    p.add_argument("expr")
    _common_flags(p, dot=True)

    p = sub.add_parser("axioms", help="list or check the builtin axiom tables")
    p.add_argument("action", choices=["list", "check"])
    p.add_argument("table", nargs="?")
    p.add_argument("--exhaustive", type=int, metavar="K", default=None,
                   help="also sweep mem-basic forms over K shared atoms")
    p.add_argument("--budget", type=int, default=axioms.DEFAULT_BUDGET,
                   help="instantiation cap for the exhaustive sweep")
    _common_flags(p)
    return top


def _mode(args: argparse.Namespace) -> Mode:
    base = FREE if getattr(args, "free", False) else MEM
    if getattr(args, "three_valued", False):
        return Mode(base.congruence, three_valued=True)
    return base


def _read_expr(text: str) -> str:
    return sys.stdin.read() if text == "-" else text


def _style(args: argparse.Namespace) -> str:
    return "json" if getattr(args, "json", False) else "unicode"


def _emit_tree(tree, args) -> None:
    if getattr(args, "dot", False):
        print(congruence.to_dot(tree))
    elif getattr(args, "json", False):
        print(json.dumps(normalform.to_json(tree), separators=(", ", ": ")))
    else:
        print(print_term(render(tree), "unicode"))


def _cmd_norm(args) -> int:
    term = parse(_read_expr(args.expr))
    tree = congruence.normal_form(term, _mode(args))
    _emit_tree(tree, args)
    return 0


def _cmd_eq(args) -> int:
    mode = _mode(args)
    left = congruence.normal_form(parse(_read_expr(args.expr)), mode)
    right = congruence.normal_form(parse(_read_expr(args.expr2)), mode)

    def show(tree) -> str:
        if getattr(args, "json", False):
            return json.dumps(normalform.to_json(tree), separators=(", ", ": "))
        return print_term(render(tree), "unicode")

    if left == right:
        print(show(left))
        return 0
    print(show(left))
    print(show(right))
    return 1


def _cmd_dual(args) -> int:
    from .syntax import dual

    term = dual(parse(_read_expr(args.expr)))
    print(print_term(term, _style(args), primes=args.primes))
    return 0


def _cmd_eval(args) -> int:
    term = parse(_read_expr(args.expr))
    valuation: dict[str, bool] = {}
    if args.val:
        for item in args.val.split(","):
            name, _, bit = item.partition("=")
            if bit not in ("0", "1"):
                raise SclError(f"bad valuation entry {item!r}; use atom=0|1")
            valuation[name.strip()] = bit == "1"
    print(congruence.evaluate(term, valuation).value)
    return 0


def _cmd_to_nand(args) -> int:
    term = translate.encode_nand(parse(_read_expr(args.expr)))
    print(print_term(term, _style(args), primes=args.primes))
    return 0


def _cmd_from_nand(args) -> int:
    term = translate.decode_nand(parse(_read_expr(args.expr)))
    print(print_term(term, _style(args), primes=args.primes))
    return 0


def _cmd_munbf(args) -> int:
    form = nandform.check_munbf(nandform.nand_nf(parse(_read_expr(args.expr))))
    if getattr(args, "json", False):
        print(json.dumps(nandform.to_json(form), separators=(", ", ": ")))
    else:
        print(print_term(nandform.render_nand(form), "unicode",
                         primes=args.primes))
    return 0


def _cmd_tree(args) -> int:
    term = parse(_read_expr(args.expr))
    tree = congruence.normal_form(term, _mode(args))
    print(congruence.to_dot(tree))
    return 0


def _cmd_axioms(args) -> int:
    if args.action == "list":
        for table in axioms.builtin_tables():
            kind = "refutable" if table.expect_refuted else "valid"
            mode = table.mode.congruence + ("+U" if table.mode.three_valued else "")
            print(f"{table.name}: {len(table.schemas)} schemas, {mode}, {kind}")
        return 0
    if not args.table:
        raise SclError("axioms check requires a table name")
    table = axioms.table_by_name(args.table)
    want = "refuted" if table.expect_refuted else "passed"
    ok = True

    def report(results, label: str) -> None:
        nonlocal ok
        good = sum(1 for _, r in results if r.refuted == table.expect_refuted)
        note = ""
        if any(r.budget_exceeded for _, r in results):
            note = ", budget exceeded"
        print(f"{good}/{len(results)} {want} ({label}{note})")
        for schema, r in results:
            if r.refuted != table.expect_refuted:
                ok = False
                print(f"  {schema.name}: {r.verdict.value}")

    report(axioms.check_table(table, "fresh_atoms",
                              three_valued=args.three_valued or None),
           "fresh-atoms")
    if args.exhaustive is not None and not table.expect_refuted:
        report(axioms.check_table(table, "exhaustive", k=args.exhaustive,
                                  budget=args.budget,
                                  three_valued=args.three_valued or None),
               f"exhaustive k={args.exhaustive}")
    return 0 if ok else 1


_COMMANDS = {
    "norm": _cmd_norm,
    "eq": _cmd_eq,
    "dual": _cmd_dual,
    "eval": _cmd_eval,
    "to-nand": _cmd_to_nand,
    "from-nand": _cmd_from_nand,
    "munbf": _cmd_munbf,
    "tree": _cmd_tree,
    "axioms": _cmd_axioms,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except InvariantError as exc:
        print(f"sclc: internal error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, SclError, KeyError) as exc:
        print(f"sclc: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
