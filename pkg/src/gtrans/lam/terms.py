"""Lambda terms: construction, printing, reading, variable sets and alpha-equivalence."""
from __future__ import annotations

import re

from ..generated.foldl_lam import foldl_lam
from ..generated.lam_gen import App, Lam, Var, lam, lam_gcata
from ..generated.show_lam import show_lam

Term = lam

__all__ = [
    "Term", "Var", "App", "Lam", "TermSyntaxError",
    "show", "better_show", "parse_term", "read_shown",
    "term_vars", "free_vars", "binders", "alpha_eq", "to_debruijn",
]


def show(t: Term) -> str:
    return lam_gcata(show_lam(), None, t)


class BetterShow(show_lam):
    """``show`` that prints variables bare, at any depth."""

    def c_Var(self, inh, s, x):
        return x


def better_show(t: Term) -> str:
    return lam_gcata(BetterShow(), None, t)


class Vars(foldl_lam):
    def c_Var(self, acc, s, x):
        return acc | {x}


class FreeVars(Vars):
    def c_Lam(self, acc, s, x, body):
        return acc | (body.fx(frozenset()) - {x})


class Binders(foldl_lam):
    def c_Lam(self, acc, s, x, body):
        return body.fx(acc | {x})


def term_vars(t: Term) -> frozenset[str]:
    """Names of all variable occurrences (binders themselves are not counted)."""
    return lam_gcata(Vars(), frozenset(), t)


def free_vars(t: Term) -> frozenset[str]:
    return lam_gcata(FreeVars(), frozenset(), t)


def binders(t: Term) -> frozenset[str]:
    return lam_gcata(Binders(), frozenset(), t)


def to_debruijn(t: Term, env: tuple[str, ...] = ()):
    """Nameless form: bound variables become indices, free ones keep their names."""
    match t:
        case Var(x):
            return ("bound", env.index(x)) if x in env else ("free", x)
        case App(f, a):
            return ("app", to_debruijn(f, env), to_debruijn(a, env))
        case Lam(x, body):
            return ("lam", to_debruijn(body, (x,) + env))
    raise TypeError(f"not a term: {t!r}")


def alpha_eq(a: Term, b: Term) -> bool:
    return to_debruijn(a) == to_debruijn(b)


# -- concrete syntax -------------------------------------------------------

class TermSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"column {pos + 1}: {message}")


_IDENT = r"[a-zA-Z][a-zA-Z0-9']*"
_TOKENS = re.compile(rf"\s*(?:(?P<ident>{_IDENT})|(?P<sym>[\\λ.(),]))")


def _lex(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while True:
        m = _TOKENS.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip():
                skipped = len(text[pos:]) - len(text[pos:].lstrip())
                raise TermSyntaxError(f"unexpected character {text[pos + skipped]!r}", pos + skipped)
            break
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Reader:
    def __init__(self, text: str):
        self.toks = _lex(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value: str | None = None, kind: str | None = None):
        k, v, pos = self.toks[self.i]
        if (value is not None and v != value) or (kind is not None and k != kind):
            want = repr(value) if value else kind
            got = "end of input" if k == "eof" else repr(v)
            raise TermSyntaxError(f"expected {want}, found {got}", pos)
        self.i += 1
        return v

    def done(self):
        k, v, pos = self.peek()
        if k != "eof":
            raise TermSyntaxError(f"unexpected {v!r}", pos)


class _LambdaReader(_Reader):
    # term := "\" ident "." term | atom { atom } [ "\" ... ]
    def term(self) -> Term:
        if self.peek()[1] in ("\\", "λ"):
            return self.abstraction()
        t = self.atom()
        while True:
            k, v, _ = self.peek()
            if k == "ident" or v == "(":
                t = App(t, self.atom())
            elif v in ("\\", "λ"):
                return App(t, self.abstraction())
            else:
                return t

    def abstraction(self) -> Term:
        self.i += 1
        x = self.take(kind="ident")
        self.take(".")
        return Lam(x, self.term())

    def atom(self) -> Term:
        k, v, pos = self.peek()
        if k == "ident":
            self.i += 1
            return Var(v)
        if v == "(":
            self.i += 1
            t = self.term()
            self.take(")")
            return t
        raise TermSyntaxError("expected a variable, '(' or '\\'" if k != "eof"
                              else "unexpected end of input", pos)


class _ShownReader(_Reader):
    def term(self) -> Term:
        ctor = self.take(kind="ident")
        self.take("(")
        if ctor == "Var":
            t = Var(self.take(kind="ident"))
        elif ctor == "App":
            f = self.term()
            self.take(",")
            t = App(f, self.term())
        elif ctor == "Lam":
            x = self.take(kind="ident")
            self.take(",")
            t = Lam(x, self.term())
        else:
            raise TermSyntaxError(f"unknown constructor {ctor}", self.toks[self.i - 2][2])
        self.take(")")
        return t


def parse_term(text: str) -> Term:
    r"""Read ``\x. body`` / juxtaposition syntax; application is left-associative."""
    r = _LambdaReader(text)
    t = r.term()
    r.done()
    return t


def read_shown(text: str) -> Term:
    """Inverse of :func:`show`."""
    r = _ShownReader(text)
    t = r.term()
    r.done()
    return t
