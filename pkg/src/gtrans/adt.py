"""Type declarations: the input language of the code generator.

A small OCaml-flavoured syntax is accepted::

    type ('a, 'b) t = A of 'a | B of 'b | T of ('a, 'b) t
    type var = [ `Var of string ]
    type 'a expr = [ var | 'a arith ]
    type 'a tree = Node of 'a * 'a forest and 'a forest = Nil | Cons of 'a tree * 'a forest

Declarations are parsed into an immutable model (:class:`TypeDecl`) and
validated; open sums (``[ ... ]`` bodies) are flattened against their
includes with :func:`resolve_open_sum`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

__all__ = [
    "ParamRef", "SelfRef", "External", "TupleShape", "ArgShape",
    "CtorDecl", "Include", "Variants", "OpenSum", "TypeDecl",
    "ParseError", "ValidationError",
    "parse_decls", "parse_type_decl", "pretty_print", "pretty_print_shape",
    "resolve_open_sum", "resolve_all", "validate_cluster",
]


class ParseError(Exception):
    def __init__(self, message: str, line: int, column: int, expected: Iterable[str] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        where = f"line {line}, column {column}"
        if self.expected:
            message = f"{message}; expected one of: {', '.join(self.expected)}"
        super().__init__(f"{where}: {message}")


class ValidationError(Exception):
    def __init__(self, message: str, ident: str | None = None):
        self.ident = ident
        super().__init__(message)


# -- model -----------------------------------------------------------------

@dataclass(frozen=True)
class ParamRef:
    name: str


@dataclass(frozen=True)
class SelfRef:
    args: tuple["ArgShape", ...]


@dataclass(frozen=True)
class External:
    name: str
    args: tuple["ArgShape", ...] = ()
    # set for references to another declaration of the same ``and`` cluster
    corec: bool = field(default=False, compare=True)


@dataclass(frozen=True)
class TupleShape:
    items: tuple["ArgShape", ...]


ArgShape = Union[ParamRef, SelfRef, External, TupleShape]


@dataclass(frozen=True)
class CtorDecl:
    name: str
    args: tuple[ArgShape, ...] = ()
    tagged: bool = False  # open-sum arm (`Name)


@dataclass(frozen=True)
class Include:
    name: str
    args: tuple[ArgShape, ...] = ()


@dataclass(frozen=True)
class Variants:
    ctors: tuple[CtorDecl, ...]


@dataclass(frozen=True)
class OpenSum:
    arms: tuple[Union[CtorDecl, Include], ...]


@dataclass(frozen=True)
class TypeDecl:
    name: str
    params: tuple[str, ...]
    body: Union[Variants, OpenSum]

    @property
    def is_open(self) -> bool:
        return isinstance(self.body, OpenSum)

    @property
    def ctors(self) -> tuple[CtorDecl, ...]:
        if isinstance(self.body, OpenSum):
            raise ValidationError(f"open sum {self.name} must be resolved first", self.name)
        return self.body.ctors

    def ctor(self, name: str) -> CtorDecl:
        for c in self.ctors:
            if c.name == name:
                return c
        raise KeyError(name)


# -- lexer -----------------------------------------------------------------

_KEYWORDS = {"type", "and", "of"}

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\(\*.*?\*\))
  | (?P<tyvar>'[a-z_][A-Za-z0-9_']*)
  | (?P<tag>`[A-Z][A-Za-z0-9_']*)
  | (?P<uident>[A-Z][A-Za-z0-9_']*)
  | (?P<ident>[a-z_][A-Za-z0-9_']*)
  | (?P<sym>[=|*,()\[\]])
""", re.VERBOSE | re.DOTALL)


@dataclass(frozen=True)
class _Tok:
    kind: str  # keyword text, "ident", "uident", "tyvar", "tag", symbol text, or "eof"
    text: str
    line: int
    col: int


def _describe(kind: str) -> str:
    return {"ident": "identifier", "uident": "constructor", "tyvar": "type variable",
            "tag": "`Tag", "eof": "end of input"}.get(kind, repr(kind))


def _tokenize(source: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        text = m.group()
        col = pos - line_start + 1
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "comment":
            nls = text.count("\n")
            if nls:
                line += nls
                line_start = pos + text.rfind("\n") + 1
        elif kind != "ws":
            if kind == "ident" and text in _KEYWORDS:
                kind = text
            elif kind == "sym":
                kind = text
            elif kind == "tyvar":
                text = text[1:]
            elif kind == "tag":
                text = text[1:]
            toks.append(_Tok(kind, text, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


# -- parser ----------------------------------------------------------------

@dataclass(frozen=True)
class _App:
    """Unresolved type application ``args name``; classified after parsing."""
    name: str
    args: tuple


class _Parser:
    def __init__(self, source: str):
        self.toks = _tokenize(source)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, *expected: str):
        t = self.tok
        found = _describe(t.kind) if t.kind in ("eof",) else repr(t.text or t.kind)
        raise ParseError(f"unexpected {found}", t.line, t.col, [_describe(e) for e in expected])

    def expect(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            self.error(kind)
        t = self.tok
        self.i += 1
        return t

    def accept(self, kind: str) -> bool:
        if self.tok.kind == kind:
            self.i += 1
            return True
        return False

    # decls := decl { "and" decl } ; a file holds several such clusters
    def clusters(self) -> list[list[tuple]]:
        out = []
        while self.tok.kind != "eof":
            if self.tok.kind != "type":
                self.error("type")
            cluster = [self.decl(first=True)]
            while self.tok.kind == "and":
                cluster.append(self.decl(first=False))
            out.append(cluster)
        return out

    def decl(self, first: bool) -> tuple:
        start = self.tok
        self.expect("type" if first else "and")
        params: list[str] = []
        if self.tok.kind == "tyvar":
            params.append(self.expect("tyvar").text)
        elif self.tok.kind == "(":
            self.i += 1
            params.append(self.expect("tyvar").text)
            while self.accept(","):
                params.append(self.expect("tyvar").text)
            self.expect(")")
        name = self.expect("ident").text
        self.expect("=")
        if self.accept("["):
            arms = [self.arm()]
            while self.accept("|"):
                arms.append(self.arm())
            self.expect("]")
            body = ("open", arms)
        else:
            self.accept("|")
            ctors = [self.ctor()]
            while self.accept("|"):
                ctors.append(self.ctor())
            body = ("variants", ctors)
        return (name, tuple(params), body, start)

    def ctor(self):
        t = self.tok
        if t.kind != "uident":
            self.error("uident")
        self.i += 1
        return (t.text, self.ctor_args(), False, t)

    def ctor_args(self) -> tuple:
        if not self.accept("of"):
            return ()
        args = [self.shape()]
        while self.accept("*"):
            args.append(self.shape())
        return tuple(args)

    def arm(self):
        t = self.tok
        if t.kind == "tag":
            self.i += 1
            return (t.text, self.ctor_args(), True, t)
        if t.kind in ("tyvar", "ident", "("):
            s = self.shape()
            if not isinstance(s, _App):
                raise ParseError("an include must name a type", t.line, t.col, ["identifier"])
            return ("include", s, t)
        self.error("tag", "ident", "tyvar", "(")

    # shape := "'" IDENT | tyexpr | "(" shape { "*" shape } ")" ; tyexpr := [shapeargs] IDENT
    def shape(self):
        t = self.tok
        if t.kind == "tyvar":
            self.i += 1
            s = ParamRef(t.text)
        elif t.kind == "ident":
            self.i += 1
            s = _App(t.text, ())
        elif t.kind == "(":
            self.i += 1
            first = self.shape()
            if self.tok.kind == ",":
                items = [first]
                while self.accept(","):
                    items.append(self.shape())
                self.expect(")")
                # a parenthesised argument list must be applied
                name = self.expect("ident").text
                s = _App(name, tuple(items))
            elif self.tok.kind == "*":
                items = [first]
                while self.accept("*"):
                    items.append(self.shape())
                self.expect(")")
                s = TupleShape(tuple(items))
            else:
                self.expect(")")
                s = first
        else:
            self.error("tyvar", "ident", "(")
        while self.tok.kind == "ident":
            s = _App(self.tok.text, (s,))
            self.i += 1
        return s


def _classify(shape, decl_name: str, cluster: set[str]):
    if isinstance(shape, ParamRef):
        return shape
    if isinstance(shape, TupleShape):
        return TupleShape(tuple(_classify(s, decl_name, cluster) for s in shape.items))
    assert isinstance(shape, _App)
    args = tuple(_classify(s, decl_name, cluster) for s in shape.args)
    if shape.name == decl_name:
        return SelfRef(args)
    return External(shape.name, args, corec=shape.name in cluster and shape.name != decl_name)


def _build(raw_cluster: list[tuple]) -> list[TypeDecl]:
    names = {r[0] for r in raw_cluster}
    out = []
    for name, params, (kind, items), _ in raw_cluster:
        if kind == "variants":
            body = Variants(tuple(
                CtorDecl(c, tuple(_classify(a, name, names) for a in args), tagged)
                for c, args, tagged, _ in items))
        else:
            arms = []
            for item in items:
                if item[0] == "include" and len(item) == 3:
                    app = item[1]
                    arms.append(Include(app.name, tuple(_classify(a, name, names) for a in app.args)))
                else:
                    c, args, tagged, _ = item
                    arms.append(CtorDecl(c, tuple(_classify(a, name, names) for a in args), tagged))
            body = OpenSum(tuple(arms))
        out.append(TypeDecl(name, params, body))
    return out


# -- validation ------------------------------------------------------------

def _shape_vars(shape: ArgShape) -> Iterable[str]:
    if isinstance(shape, ParamRef):
        yield shape.name
    elif isinstance(shape, TupleShape):
        for s in shape.items:
            yield from _shape_vars(s)
    else:
        for s in shape.args:
            yield from _shape_vars(s)


def _check_shape(decl: TypeDecl, shape: ArgShape, cluster: Mapping[str, TypeDecl]) -> None:
    if isinstance(shape, SelfRef):
        own = tuple(ParamRef(p) for p in decl.params)
        if len(shape.args) != len(decl.params):
            raise ValidationError(
                f"{decl.name} expects {len(decl.params)} type argument(s), got {len(shape.args)}",
                decl.name)
        if shape.args != own:
            raise ValidationError(
                f"irregular recursive occurrence of {decl.name}: it must be applied to its own "
                f"parameters in order", decl.name)
    elif isinstance(shape, External) and shape.corec:
        other = cluster[shape.name]
        if shape.args != tuple(ParamRef(p) for p in other.params):
            raise ValidationError(
                f"irregular reference to {shape.name} inside the {decl.name} cluster: it must be "
                f"applied to its own parameters in order", shape.name)
    if isinstance(shape, (SelfRef, External, TupleShape)):
        for s in (shape.items if isinstance(shape, TupleShape) else shape.args):
            _check_shape(decl, s, cluster)


def _check_decl(decl: TypeDecl, cluster: Mapping[str, TypeDecl], env: Mapping[str, TypeDecl]) -> None:
    seen: set[str] = set()
    for p in decl.params:
        if p in seen:
            raise ValidationError(f"duplicate type parameter '{p} in {decl.name}", p)
        seen.add(p)
    if isinstance(decl.body, OpenSum):
        for arm in decl.body.arms:
            if isinstance(arm, Include) and arm.name not in env and arm.name not in cluster:
                raise ValidationError(f"unknown include {arm.name}", arm.name)
        ctors = [a for a in decl.body.arms if isinstance(a, CtorDecl)]
        shapes = [s for c in ctors for s in c.args]
        shapes += [s for a in decl.body.arms if isinstance(a, Include) for s in a.args]
    else:
        ctors = list(decl.body.ctors)
        if not ctors:
            raise ValidationError(f"empty variant {decl.name}", decl.name)
        shapes = [s for c in ctors for s in c.args]
    names: set[str] = set()
    for c in ctors:
        if not c.name[:1].isupper():
            raise ValidationError(f"constructor {c.name} must start with an uppercase letter", c.name)
        if c.name in names:
            raise ValidationError(f"duplicate constructor {c.name} in {decl.name}", c.name)
        names.add(c.name)
    for s in shapes:
        for v in _shape_vars(s):
            if v not in seen:
                raise ValidationError(f"unbound type variable '{v} in {decl.name}", v)
        _check_shape(decl, s, cluster)


def _check_include_cycles(decls: Mapping[str, TypeDecl]) -> None:
    def includes(d: TypeDecl) -> list[str]:
        if isinstance(d.body, OpenSum):
            return [a.name for a in d.body.arms if isinstance(a, Include)]
        return []

    state: dict[str, int] = {}

    def visit(name: str, path: list[str]) -> None:
        if state.get(name) == 2 or name not in decls:
            return
        if state.get(name) == 1:
            cycle = path[path.index(name):] + [name]
            raise ValidationError(f"include cycle: {' -> '.join(cycle)}", name)
        state[name] = 1
        for n in includes(decls[name]):
            visit(n, path + [name])
        state[name] = 2

    for name in decls:
        visit(name, [])


def validate_cluster(cluster: list[TypeDecl], env: Mapping[str, TypeDecl] | None = None) -> None:
    """Check every invariant of a cluster of ``and``-joined declarations.

    ``env`` holds previously declared types that includes may refer to.
    """
    env = dict(env or {})
    by_name: dict[str, TypeDecl] = {}
    for d in cluster:
        if d.name in by_name:
            raise ValidationError(f"duplicate declaration of {d.name}", d.name)
        by_name[d.name] = d
    for d in cluster:
        _check_decl(d, by_name, env)
    _check_include_cycles({**env, **by_name})


def parse_decls(source: str, env: Mapping[str, TypeDecl] | None = None) -> list[TypeDecl]:
    """Parse and validate every declaration in ``source``, in order.

    Later declarations may include earlier ones (and anything in ``env``).
    """
    raw = _Parser(source).clusters()
    known = dict(env or {})
    out: list[TypeDecl] = []
    for raw_cluster in raw:
        cluster = _build(raw_cluster)
        validate_cluster(cluster, known)
        for d in cluster:
            known[d.name] = d
        out.extend(cluster)
    return out


def parse_type_decl(source: str, env: Mapping[str, TypeDecl] | None = None) -> TypeDecl:
    decls = parse_decls(source, env)
    if len(decls) != 1:
        raise ValidationError(f"expected exactly one declaration, found {len(decls)}")
    return decls[0]


def clusters_of(decls: list[TypeDecl]) -> list[list[TypeDecl]]:
    """Group declarations into mutually recursive clusters (connected by ``corec`` references)."""
    index = {d.name: i for i, d in enumerate(decls)}
    parent = list(range(len(decls)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def corec_refs(shape: ArgShape) -> Iterable[str]:
        if isinstance(shape, External) and shape.corec:
            yield shape.name
        items = shape.items if isinstance(shape, TupleShape) else getattr(shape, "args", ())
        for s in items:
            yield from corec_refs(s)

    for i, d in enumerate(decls):
        if isinstance(d.body, Variants):
            for c in d.body.ctors:
                for s in c.args:
                    for n in corec_refs(s):
                        if n in index:
                            parent[find(i)] = find(index[n])
    groups: dict[int, list[TypeDecl]] = {}
    for i, d in enumerate(decls):
        groups.setdefault(find(i), []).append(d)
    return sorted(groups.values(), key=lambda g: index[g[0].name])


# -- open sums -------------------------------------------------------------

def _subst_shape(shape: ArgShape, binding: Mapping[str, ArgShape], target: TypeDecl,
                 source: TypeDecl) -> ArgShape:
    if isinstance(shape, ParamRef):
        return binding[shape.name]
    if isinstance(shape, TupleShape):
        return TupleShape(tuple(_subst_shape(s, binding, target, source) for s in shape.items))
    args = tuple(_subst_shape(s, binding, target, source) for s in shape.args)
    if isinstance(shape, SelfRef):
        name = source.name
    else:
        name = shape.name
    if name == target.name:
        return SelfRef(args)
    return External(name, args)


def resolve_open_sum(decl: TypeDecl, env: Mapping[str, TypeDecl]) -> TypeDecl:
    """Flatten an open sum into a plain variant declaration.

    Included declarations are instantiated with the include's type arguments
    and their constructors unioned with the inline arms. A declaration that
    is already flat is returned unchanged.
    """
    if isinstance(decl.body, Variants):
        return decl
    ctors: dict[str, CtorDecl] = {}

    def add(c: CtorDecl) -> None:
        c = CtorDecl(c.name, c.args, True)
        old = ctors.get(c.name)
        if old is None:
            ctors[c.name] = c
        elif old.args != c.args:
            raise ValidationError(
                f"conflicting constructor `{c.name} in {decl.name}: "
                f"{_ctor_text(old)} vs {_ctor_text(c)}", c.name)

    for arm in decl.body.arms:
        if isinstance(arm, CtorDecl):
            add(arm)
            continue
        if arm.name not in env:
            raise ValidationError(f"unknown include {arm.name}", arm.name)
        inc = resolve_open_sum(env[arm.name], env)
        if len(arm.args) != len(inc.params):
            raise ValidationError(
                f"{arm.name} expects {len(inc.params)} type argument(s), got {len(arm.args)}",
                arm.name)
        binding = dict(zip(inc.params, arm.args))
        for c in inc.body.ctors:
            add(CtorDecl(c.name, tuple(_subst_shape(s, binding, decl, inc) for s in c.args)))
    if not ctors:
        raise ValidationError(f"empty variant {decl.name}", decl.name)
    resolved = TypeDecl(decl.name, decl.params, Variants(tuple(ctors.values())))
    _check_decl(resolved, {decl.name: resolved}, env)
    return resolved


def resolve_all(decls: list[TypeDecl], env: Mapping[str, TypeDecl] | None = None) -> list[TypeDecl]:
    known = dict(env or {})
    known.update((d.name, d) for d in decls)
    return [resolve_open_sum(d, known) for d in decls]


# -- pretty printing -------------------------------------------------------

def pretty_print_shape(shape: ArgShape, self_name: str | None = None) -> str:
    if isinstance(shape, ParamRef):
        return "'" + shape.name
    if isinstance(shape, TupleShape):
        return "(" + " * ".join(pretty_print_shape(s, self_name) for s in shape.items) + ")"
    name = self_name if isinstance(shape, SelfRef) else shape.name
    if not shape.args:
        return name
    if len(shape.args) == 1:
        return pretty_print_shape(shape.args[0], self_name) + " " + name
    return "(" + ", ".join(pretty_print_shape(s, self_name) for s in shape.args) + ") " + name


def _ctor_text(c: CtorDecl, self_name: str | None = None) -> str:
    head = ("`" if c.tagged else "") + c.name
    if not c.args:
        return head
    return head + " of " + " * ".join(pretty_print_shape(s, self_name) for s in c.args)


def _params_text(params: tuple[str, ...]) -> str:
    if not params:
        return ""
    if len(params) == 1:
        return f"'{params[0]} "
    return "(" + ", ".join("'" + p for p in params) + ") "


def pretty_print(decls: TypeDecl | list[TypeDecl]) -> str:
    """Render declarations back into concrete syntax (one ``and`` cluster per list)."""
    if isinstance(decls, TypeDecl):
        decls = [decls]
    parts = []
    for i, d in enumerate(decls):
        kw = "type" if i == 0 else "and"
        if isinstance(d.body, OpenSum):
            arms = []
            for a in d.body.arms:
                if isinstance(a, Include):
                    arms.append(pretty_print_shape(External(a.name, a.args), d.name))
                else:
                    arms.append(_ctor_text(a, d.name))
            body = "[ " + " | ".join(arms) + " ]"
        else:
            body = " | ".join(_ctor_text(c, d.name) for c in d.body.ctors)
        parts.append(f"{kw} {_params_text(d.params)}{d.name} = {body}")
    return "\n".join(parts)
