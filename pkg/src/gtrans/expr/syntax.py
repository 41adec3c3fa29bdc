"""Concrete syntax for expressions: integers, identifiers, ``+``, ``*`` and parentheses.

There is no literal constructor, so an integer ``n`` is read as the variable
named by its digits; :func:`literal_bindings` supplies their values.
"""
from __future__ import annotations

import re

from ..runtime import Variant

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>[+*()]))")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"column {pos + 1}: {message}")


def _lex(text: str):
    toks, pos = [], 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip():
                at = pos + len(rest) - len(rest.lstrip())
                raise ExprSyntaxError(f"unexpected character {text[at]!r}", at)
            break
        toks.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


def parse_expr(text: str):
    toks = _lex(text)
    i = 0

    def peek():
        return toks[i]

    def expect(v):
        nonlocal i
        k, got, pos = toks[i]
        if got != v or k == "eof":
            raise ExprSyntaxError(f"expected {v!r}, found {'end of input' if k == 'eof' else repr(got)}", pos)
        i += 1

    def sum_():
        e = product()
        while peek()[1] == "+" and peek()[0] == "sym":
            expect("+")
            e = Variant("Add", (e, product()))
        return e

    def product():
        e = atom()
        while peek()[1] == "*" and peek()[0] == "sym":
            expect("*")
            e = Variant("Mul", (e, atom()))
        return e

    def atom():
        nonlocal i
        k, v, pos = peek()
        if k in ("num", "ident"):
            i += 1
            return Variant("Var", (v,))
        if v == "(" and k == "sym":
            i += 1
            e = sum_()
            expect(")")
            return e
        raise ExprSyntaxError("unexpected end of input" if k == "eof" else f"unexpected {v!r}", pos)

    e = sum_()
    k, v, pos = peek()
    if k != "eof":
        raise ExprSyntaxError(f"unexpected {v!r}", pos)
    return e


def literal_bindings(e) -> dict[str, int]:
    """Values for the digit-named variables produced by integer literals."""
    out: dict[str, int] = {}
    stack = [e]
    while stack:
        v = stack.pop()
        if v.tag == "Var":
            if v.args[0].isdigit():
                out[v.args[0]] = int(v.args[0])
        else:
            stack.extend(v.args)
    return out
