"""Command-line entry point: ``gtrans gen | reduce | show | eval``.

Exit codes: 0 ok, 1 user error, 2 I/O error, 3 out of fuel.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .adt import ParseError, ValidationError, parse_decls
from .codegen import GenerationError, UnknownPlugin, generate_module, write_outputs

OK, USER_ERROR, IO_ERROR, OUT_OF_FUEL = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _fuel(arg: int | None) -> int:
    from .lam.reduction import DEFAULT_FUEL
    if arg is not None:
        return arg
    env = os.environ.get("GT_FUEL")
    if env is None:
        return DEFAULT_FUEL
    try:
        return int(env)
    except ValueError:
        raise _UsageError(f"GT_FUEL must be an integer, got {env!r}") from None


def cmd_gen(args, out, err) -> int:
    plugins = [p for p in (args.with_ or "").split(",") if p]
    try:
        source = Path(args.input).read_text(encoding="utf-8")
    except OSError as e:
        print(f"error: {e}", file=err)
        return IO_ERROR
    try:
        units = generate_module(parse_decls(source), plugins)
    except ParseError as e:
        print(f"{args.input}: {e}", file=err)
        return USER_ERROR
    except GenerationError as e:
        for name, cause in e.errors:
            print(f"{args.input}: {name}: {cause}", file=err)
        return USER_ERROR
    except (ValidationError, UnknownPlugin) as e:
        print(f"{args.input}: {e.args[0] if e.args else e}", file=err)
        return USER_ERROR
    try:
        written = write_outputs(units, args.output)
    except OSError as e:
        print(f"error: {e}", file=err)
        return IO_ERROR
    for path in written:
        print(path, file=out)
    return OK


def cmd_reduce(args, out, err) -> int:
    from .lam import STRATEGY_NAMES, FuelExhausted, TermSyntaxError, parse_term, reduce, reduce_with_trace, show
    if args.strategy not in STRATEGY_NAMES:
        print(f"unknown strategy {args.strategy!r}; expected one of: {', '.join(STRATEGY_NAMES)}", file=err)
        return USER_ERROR
    try:
        term = parse_term(args.term)
    except TermSyntaxError as e:
        print(f"parse error: {e}", file=err)
        return USER_ERROR
    fuel = _fuel(args.fuel)
    try:
        if args.trace:
            result, snapshots = reduce_with_trace(args.strategy, term, fuel)
            for snap in snapshots:
                print(show(snap), file=out)
        else:
            result = reduce(args.strategy, term, fuel)
    except FuelExhausted as e:
        if args.trace:
            for snap in e.trace:
                print(show(snap), file=out)
        print(f"out of fuel: {e}", file=err)
        return OUT_OF_FUEL
    print(show(result), file=out)
    return OK


def cmd_show(args, out, err) -> int:
    from .lam import TermSyntaxError, parse_term, show
    try:
        term = parse_term(args.term)
    except TermSyntaxError as e:
        print(f"parse error: {e}", file=err)
        return USER_ERROR
    print(show(term), file=out)
    return OK


def _binding(text: str) -> tuple[str, int]:
    name, sep, value = text.partition("=")
    try:
        if not sep or not name:
            raise ValueError
        return name.strip(), int(value)
    except ValueError:
        raise _UsageError(f"bad binding {text!r}; expected name=integer") from None


def cmd_eval(args, out, err) -> int:
    from .expr import ExprSyntaxError, UnboundVariable, evaluate, literal_bindings, parse_expr
    try:
        e = parse_expr(args.expr)
    except ExprSyntaxError as ex:
        print(f"parse error: {ex}", file=err)
        return USER_ERROR
    bindings = {**literal_bindings(e), **dict(_binding(b) for b in args.bind)}
    try:
        print(evaluate(e, bindings), file=out)
    except UnboundVariable as ex:
        print(ex, file=err)
        return USER_ERROR
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gtrans", description="Generic transformers: code generation and showcases.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate traversal code from type declarations")
    g.add_argument("input")
    g.add_argument("--with", dest="with_", default="", metavar="PLUGINS",
                   help="comma-separated plugins, e.g. show,foldl")
    g.add_argument("-o", "--output", default=".", metavar="DIR")
    g.set_defaults(run=cmd_gen)

    r = sub.add_parser("reduce", help="reduce a lambda term")
    r.add_argument("term")
    r.add_argument("--strategy", "-s", default="nor", help="bn|nor|bv|ao|ha|he|hn")
    r.add_argument("--trace", action="store_true", help="print every intermediate term")
    r.add_argument("--fuel", type=int, default=None, help="beta-step limit (default: $GT_FUEL or 10000)")
    r.set_defaults(run=cmd_reduce)

    s = sub.add_parser("show", help="print a lambda term in constructor form")
    s.add_argument("term")
    s.set_defaults(run=cmd_show)

    e = sub.add_parser("eval", help="evaluate an arithmetic expression")
    e.add_argument("expr")
    e.add_argument("-b", "--bind", action="append", default=[], metavar="NAME=INT")
    e.set_defaults(run=cmd_eval)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out, err)
    except _UsageError as e:
        print(e, file=err)
        return USER_ERROR


if __name__ == "__main__":
    sys.exit(main())
