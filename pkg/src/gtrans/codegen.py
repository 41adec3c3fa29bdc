"""Python source generation from type declarations.

For each declaration ``t`` the generator emits one module ``t_gen.py`` with
the constructor classes, the traversal function ``t_gcata`` and the abstract
transformer ``t_t``; each plugin ``p`` adds a module ``p_t.py`` holding the
concrete transformer class ``p_t``.
"""
from __future__ import annotations

import json
import keyword
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping

from . import __version__
from .adt import (
    ArgShape, CtorDecl, External, OpenSum, ParamRef, SelfRef, TupleShape, TypeDecl,
    ValidationError, clusters_of, pretty_print, resolve_open_sum,
)

__all__ = [
    "GenUnit", "Plugin", "UnsupportedShape", "UnknownPlugin", "GenerationError",
    "KNOWN_EXTERNALS", "register_external", "register_plugin", "get_plugin",
    "augmentation_rule", "gen_types", "gen_traversal", "gen_abstract_transformer",
    "run_plugin", "generate_module", "write_outputs",
]

INDENT = "    "


class UnsupportedShape(ValidationError):
    pass


class UnknownPlugin(KeyError):
    pass


class GenerationError(Exception):
    """Errors collected over a whole module, each tagged with its declaration."""

    def __init__(self, errors: list[tuple[str, Exception]]):
        self.errors = errors
        super().__init__("; ".join(f"{name}: {err}" for name, err in errors))


# Python renderings of the external types generated code may mention raw.
KNOWN_EXTERNALS: dict[str, Callable[[list[str]], str]] = {
    "string": lambda a: "str",
    "int": lambda a: "int",
    "bool": lambda a: "bool",
    "float": lambda a: "float",
    "char": lambda a: "str",
    "unit": lambda a: "None",
    "list": lambda a: f"list[{a[0]}]" if a else "list",
    "option": lambda a: f"{a[0]} | None" if a else "object",
}


def register_external(name: str, render: Callable[[list[str]], str] | None = None) -> None:
    KNOWN_EXTERNALS[name] = render or (lambda a, _n=name: _n)


_RESERVED = {"dataclasses", "functools", "typing", "gt", "str", "TypeError"}
_LOCALS = {"self", "trans", "inh", "subj", "tpo", "s"}


# -- classification --------------------------------------------------------

def augmentation_rule(shape: ArgShape) -> int:
    """Which augmentation rule applies to a constructor argument of this shape.

    1: a type parameter (or a co-recursive sibling type), augmented with the
       supplied transformation; 2: the type itself, augmented with the
       traversal; 3: anything else, passed raw.
    """
    if isinstance(shape, ParamRef):
        return 1
    if isinstance(shape, External) and shape.corec:
        return 1
    if isinstance(shape, SelfRef):
        return 2
    return 3


def is_poly(decl: TypeDecl) -> bool:
    """True for (resolved) open sums, whose values are ``gt.Variant`` instances."""
    return isinstance(decl.body, OpenSum) or any(c.tagged for c in decl.body.ctors)


def param_fn(param: str) -> str:
    return "f" + param


def corec_fn(type_name: str) -> str:
    return "f_" + type_name


def augmenter(shape: ArgShape) -> str:
    if isinstance(shape, ParamRef):
        return param_fn(shape.name)
    if isinstance(shape, SelfRef):
        return "self"
    if isinstance(shape, External) and shape.corec:
        return corec_fn(shape.name)
    raise ValueError(f"shape {shape!r} is passed raw")


def py_type(decl: TypeDecl, shape: ArgShape) -> str:
    if isinstance(shape, ParamRef):
        return shape.name
    if isinstance(shape, SelfRef):
        return decl.name
    if isinstance(shape, TupleShape):
        return "tuple[" + ", ".join(py_type(decl, s) for s in shape.items) + "]"
    args = [py_type(decl, s) for s in shape.args]
    if shape.corec or shape.name not in KNOWN_EXTERNALS:
        return shape.name
    return KNOWN_EXTERNALS[shape.name](args)


def _check_externals(decl: TypeDecl, shape: ArgShape, known: set[str]) -> None:
    if isinstance(shape, External) and not shape.corec:
        if shape.name not in KNOWN_EXTERNALS and shape.name not in known:
            raise UnsupportedShape(
                f"{decl.name}: no traversal registered for external type {shape.name}", shape.name)
    if isinstance(shape, TupleShape):
        for s in shape.items:
            _check_externals(decl, s, known)
    elif not isinstance(shape, ParamRef):
        for s in shape.args:
            _check_externals(decl, s, known)


def _check_names(decl: TypeDecl, siblings: Iterable[str]) -> None:
    names: dict[str, str] = {}

    def claim(name: str, what: str) -> None:
        if keyword.iskeyword(name) or name in _RESERVED:
            raise ValidationError(f"{what} {name} clashes with a reserved name", name)
        if name in names:
            raise ValidationError(f"{what} {name} clashes with {names[name]} {name}", name)
        names[name] = what

    for p in decl.params:
        claim(p, "type variable")
        claim("t" + p, "type variable")
    claim("inh", "type variable")
    claim("syn", "type variable")
    if not is_poly(decl):
        claim(decl.name, "type")
    for c in decl.ctors:
        if not is_poly(decl):
            claim(c.name, "constructor")
    claim(decl.name + "_gcata", "traversal")
    claim(decl.name + "_t", "abstract transformer")
    fns = {param_fn(p) for p in decl.params} | {corec_fn(n) for n in siblings}
    if len(fns) != len(decl.params) + len(list(siblings)) or fns & _LOCALS:
        raise ValidationError(f"parameter names of {decl.name} clash in the traversal", decl.name)


# -- data ------------------------------------------------------------------

@dataclass(frozen=True)
class Plugin:
    """A code-generation plugin.

    ``signature`` maps a declaration to the Python renderings of the
    inherited attribute, the synthesized attribute and one synthesized type
    per type parameter. ``method_body`` returns the body of handler ``c_C``
    (statements, unindented) for one constructor; the handler's arguments are
    always named ``inh``, ``s`` and ``p1 .. pn``.
    """

    name: str
    signature: Callable[[TypeDecl], tuple[str, str, tuple[str, ...]]]
    method_body: Callable[[TypeDecl, CtorDecl], str]
    needs_ctors: bool = False
    doc: str = ""


@dataclass(frozen=True)
class GenUnit:
    decl: TypeDecl
    types_src: str
    traversal_src: str
    abstract_transformer_src: str
    plugin_srcs: Mapping[str, str]
    # (ctor name, augmentation rule per argument), in declaration order
    arms: tuple[tuple[str, tuple[int, ...]], ...] = ()
    source_text: str = ""
    knot_src: str = ""
    imports: tuple[str, ...] = ()

    @property
    def module_name(self) -> str:
        return f"{self.decl.name}_gen"

    def plugin_module_name(self, plugin: str) -> str:
        return f"{plugin}_{self.decl.name}"

    def module_src(self) -> str:
        header = [
            f"# Generated by gtrans {__version__} from:",
            *(f"#   {line}" for line in self.source_text.splitlines()),
            "# Do not edit; regenerate with `gtrans gen`.",
            "from __future__ import annotations",
            "",
            "import dataclasses",
            "import functools",
            "import typing",
            "",
            "from gtrans import runtime as gt",
        ]
        header += list(self.imports)
        parts = ["\n".join(header), self.types_src, self.traversal_src,
                 self.abstract_transformer_src]
        if self.knot_src:
            parts.append(self.knot_src)
        return "\n\n\n".join(p.rstrip("\n") for p in parts if p) + "\n"

    def files(self) -> dict[str, str]:
        out = {self.module_name + ".py": self.module_src()}
        for name, src in self.plugin_srcs.items():
            out[self.plugin_module_name(name) + ".py"] = src
        return out


# -- emitters --------------------------------------------------------------

def _typevars(decl: TypeDecl) -> list[str]:
    out = []
    for p in decl.params:
        out += [p, "t" + p]
    return out + ["inh", "syn"]


def gen_types(decl: TypeDecl) -> str:
    """TypeVars and constructor classes (none for open sums: they use ``gt.Variant``)."""
    lines = [f'{v} = typing.TypeVar("{v}")' for v in _typevars(decl)]
    if is_poly(decl):
        return "\n".join(lines)
    blocks = ["\n".join(lines)]
    for c in decl.ctors:
        body = [f"{INDENT}_{i}: {py_type(decl, s)}" for i, s in enumerate(c.args, 1)] or [f"{INDENT}pass"]
        blocks.append("@dataclasses.dataclass(frozen=True)\nclass " + c.name + ":\n" + "\n".join(body))
    blocks.append(f"{decl.name} = " + " | ".join(c.name for c in decl.ctors))
    return "\n\n\n".join(blocks)


def _pattern(decl: TypeDecl, c: CtorDecl) -> str:
    ps = [f"p{i}" for i in range(1, len(c.args) + 1)]
    if is_poly(decl):
        inner = "(" + ", ".join(ps) + ("," if len(ps) == 1 else "") + ")"
        return f'gt.Variant("{c.name}", {inner})'
    return f"{c.name}(" + ", ".join(ps) + ")"


def gen_traversal(decl: TypeDecl, siblings: tuple[str, ...] = (),
                  known: Iterable[str] = ()) -> str:
    """Emit ``<t>_gcata(f<param>..., f_<sibling>..., trans, inh, subj)``."""
    if isinstance(decl.body, OpenSum):
        raise ValidationError(f"open sum {decl.name} must be resolved before generation", decl.name)
    if not decl.ctors:
        raise ValidationError(f"empty variant {decl.name}", decl.name)
    known = set(known) | {decl.name} | set(siblings)
    for c in decl.ctors:
        for s in c.args:
            _check_externals(decl, s, known)
    fns = [param_fn(p) for p in decl.params] + [corec_fn(n) for n in siblings]
    head = ", ".join(fns + ["trans", "inh", "subj"])
    lines = [
        f"def {decl.name}_gcata({head}):",
        f"{INDENT}self = functools.partial({decl.name}_gcata, " + ", ".join(fns + ["trans"]) + ")",
        f"{INDENT}tpo = gt.ParamBundle(" + ", ".join(f"{p}={param_fn(p)}" for p in decl.params) + ")",
        f"{INDENT}match subj:",
    ]
    for c in decl.ctors:
        args = ["inh", "gt.make_aug(subj, self, tpo)"]
        for i, s in enumerate(c.args, 1):
            if augmentation_rule(s) == 3:
                args.append(f"p{i}")
            else:
                args.append(f"gt.make_aug(p{i}, {augmenter(s)}, tpo)")
        lines.append(f"{INDENT * 2}case {_pattern(decl, c)}:")
        lines.append(f"{INDENT * 3}return trans.c_{c.name}(" + ", ".join(args) + ")")
    lines.append(f'{INDENT}raise TypeError(f"{decl.name}_gcata: not a value of type {decl.name}: {{subj!r}}")')
    return "\n".join(lines)


def handler_params(decl: TypeDecl, c: CtorDecl) -> list[tuple[str, str]]:
    out = [("inh", "inh"), ("s", "gt.Aug")]
    for i, s in enumerate(c.args, 1):
        out.append((f"p{i}", "gt.Aug" if augmentation_rule(s) != 3 else py_type(decl, s)))
    return out


def gen_abstract_transformer(decl: TypeDecl) -> str:
    """Emit the abstract transformer ``<t>_t``.

    Its generic parameters interleave each type parameter with the type of
    that parameter's synthesized attribute, then inherited and synthesized
    attribute types: ``(a, ta, b, tb, inh, syn)``.
    """
    if isinstance(decl.body, OpenSum):
        raise ValidationError(f"open sum {decl.name} must be resolved before generation", decl.name)
    lines = [
        f"class {decl.name}_t(gt.Transformer, typing.Generic[{', '.join(_typevars(decl))}]):",
        f'{INDENT}"""Abstract transformer for {decl.name}."""',
    ]
    for c in decl.ctors:
        sig = ", ".join(["self"] + [f"{n}: {t}" for n, t in handler_params(decl, c)])
        lines += ["", f"{INDENT}def c_{c.name}({sig}) -> syn:",
                  f"{INDENT * 2}raise NotImplementedError"]
    return "\n".join(lines)


def _indent(body: str, depth: int) -> str:
    return "\n".join((INDENT * depth + line) if line else "" for line in body.splitlines())


def run_plugin(plugin: Plugin | str, decl: TypeDecl) -> str:
    """Emit the module for ``plugin`` applied to ``decl`` (class ``<plugin>_<t>``)."""
    if isinstance(plugin, str):
        plugin = get_plugin(plugin)
    if isinstance(decl.body, OpenSum):
        raise ValidationError(f"open sum {decl.name} must be resolved before generation", decl.name)
    inh_t, syn_t, param_ts = plugin.signature(decl)
    targs = []
    for _, pt in zip(decl.params, param_ts):
        targs += ["typing.Any", pt]
    targs += [inh_t, syn_t]
    imports = [f"{decl.name}_t"]
    if plugin.needs_ctors and not is_poly(decl):
        imports = [c.name for c in decl.ctors] + imports
    lines = [
        f"# Generated by gtrans {__version__}: plugin {plugin.name} for {decl.name}.",
        "# Do not edit; regenerate with `gtrans gen`.",
        "from __future__ import annotations",
        "",
        "import typing",
        "",
        "from gtrans import runtime as gt",
        "",
        f"from .{decl.name}_gen import " + ", ".join(imports),
        "",
        "",
        f"class {plugin.name}_{decl.name}({decl.name}_t[{', '.join(targs)}]):",
    ]
    if plugin.doc:
        lines.append(f'{INDENT}"""{plugin.doc}"""')
    for i, c in enumerate(decl.ctors):
        if i or plugin.doc:
            lines.append("")
        params = ", ".join(["self"] + [n for n, _ in handler_params(decl, c)])
        lines.append(f"{INDENT}def c_{c.name}({params}):")
        lines.append(_indent(plugin.method_body(decl, c), 2))
    return "\n".join(lines) + "\n"


def _knot(cluster: list[TypeDecl]) -> str:
    params: list[str] = []
    for d in cluster:
        params += [p for p in d.params if p not in params]
    names = [d.name for d in cluster]
    head = [param_fn(p) for p in params] + [f"{n}_trans" for n in names]
    lines = [f"def knot_{'_'.join(names)}({', '.join(head)}):",
             f'{INDENT}"""Tie the traversals of a mutually recursive cluster together."""']
    for d in cluster:
        args = ([param_fn(p) for p in d.params]
                + [corec_fn(n) for n in names if n != d.name]
                + [f"{d.name}_trans", "inh", "subj"])
        lines += [f"{INDENT}def {corec_fn(d.name)}(inh, subj):",
                  f"{INDENT * 2}return {d.name}_gcata({', '.join(args)})",
                  ""]
    lines.append(f"{INDENT}return " + ", ".join(corec_fn(n) for n in names))
    return "\n".join(lines)


def generate_module(decls: list[TypeDecl], plugins: Iterable[str | Plugin] = (),
                    env: Mapping[str, TypeDecl] | None = None) -> list[GenUnit]:
    """Generate one :class:`GenUnit` per declaration, applying every plugin to each."""
    decls = list(decls)
    if not decls:
        return []
    plugins = [get_plugin(p) if isinstance(p, str) else p for p in plugins]
    known_env = dict(env or {})
    known_env.update((d.name, d) for d in decls)
    names = set(known_env)
    errors: list[tuple[str, Exception]] = []
    units: list[GenUnit] = []
    resolved: dict[str, TypeDecl] = {}
    for d in decls:
        try:
            resolved[d.name] = resolve_open_sum(d, known_env)
        except ValidationError as e:
            errors.append((d.name, e))
    clusters = clusters_of([resolved.get(d.name, d) for d in decls])
    for cluster in clusters:
        siblings_of = {d.name: tuple(n.name for n in cluster if n.name != d.name) for d in cluster}
        for idx, orig in enumerate(d for d in decls if d.name in siblings_of):
            if orig.name not in resolved:
                continue
            decl = resolved[orig.name]
            sibs = siblings_of[decl.name]
            try:
                _check_names(decl, sibs)
                traversal = gen_traversal(decl, sibs, names)
                abstract = gen_abstract_transformer(decl)
                plugin_srcs = {p.name: run_plugin(p, decl) for p in plugins}
            except (ValidationError, KeyError) as e:
                errors.append((decl.name, e))
                continue
            knot, imports = "", ()
            if len(cluster) > 1 and idx == 0:
                knot = _knot(cluster)
                imports = ("",) + tuple(f"from .{n}_gen import {n}_gcata" for n in sibs)
            units.append(GenUnit(
                decl=decl,
                types_src=gen_types(decl),
                traversal_src=traversal,
                abstract_transformer_src=abstract,
                plugin_srcs={p.name: plugin_srcs[p.name] for p in plugins},
                arms=tuple((c.name, tuple(augmentation_rule(s) for s in c.args)) for c in decl.ctors),
                source_text=pretty_print(orig),
                knot_src=knot,
                imports=imports,
            ))
    if errors:
        raise GenerationError(errors)
    order = {d.name: i for i, d in enumerate(decls)}
    units.sort(key=lambda u: order[u.decl.name])
    files: dict[str, str] = {}
    for u in units:
        for fname in u.files():
            if fname in files:
                raise GenerationError([(u.decl.name, ValidationError(
                    f"output file {fname} clashes with one generated for {files[fname]}", fname))])
            files[fname] = u.decl.name
    return units


def manifest(units: list[GenUnit]) -> list[dict]:
    return [{"decl": u.decl.name, "files": list(u.files()), "plugins": list(u.plugin_srcs)}
            for u in units]


def write_outputs(units: list[GenUnit], outdir: str | Path, manifest_name: str = "manifest.json") -> list[Path]:
    """Write every unit's files and a JSON manifest to ``outdir``; return the written paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for u in units:
        for fname, text in u.files().items():
            path = outdir / fname
            path.write_text(text, encoding="utf-8")
            written.append(path)
    mpath = outdir / manifest_name
    mpath.write_text(json.dumps(manifest(units), indent=2) + "\n", encoding="utf-8")
    written.append(mpath)
    return written


# -- plugin registry -------------------------------------------------------

_PLUGINS: dict[str, Plugin] = {}


def register_plugin(plugin: Plugin) -> Plugin:
    _PLUGINS[plugin.name] = plugin
    return plugin


def get_plugin(name: str) -> Plugin:
    from . import plugins  # noqa: F401  (registers the built-ins)
    try:
        return _PLUGINS[name]
    except KeyError:
        raise UnknownPlugin(f"unknown plugin {name!r}; known: {', '.join(sorted(_PLUGINS))}") from None


def plugin_names() -> list[str]:
    from . import plugins  # noqa: F401
    return sorted(_PLUGINS)
