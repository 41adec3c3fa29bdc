"""The built-in plugins: ``show``, ``foldl`` and ``map``."""
from __future__ import annotations

from typing import Callable, Mapping

from .adt import CtorDecl, External, ParamRef, SelfRef, TupleShape, TypeDecl
from .codegen import Plugin, UnsupportedShape, augmentation_rule, is_poly, register_plugin

__all__ = ["SHOW_RENDERERS", "show_plugin", "show_body", "foldl_body", "map_body",
           "SHOW", "FOLDL", "MAP"]

# Expression templates rendering a raw primitive value as text.
SHOW_RENDERERS: dict[str, Callable[[str], str]] = {
    "string": lambda v: v,
    "int": lambda v: f"str({v})",
    "bool": lambda v: f'("true" if {v} else "false")',
}


def _ctor_label(c: CtorDecl) -> str:
    return ("`" if c.tagged else "") + c.name


def _show_raw(decl: TypeDecl, shape, v: str, renderers: Mapping[str, Callable[[str], str]]) -> str:
    if isinstance(shape, ParamRef):
        return f"s.tp.{shape.name}(inh, {v})"
    if isinstance(shape, SelfRef):
        return f"s.f(inh, {v})"
    if isinstance(shape, TupleShape):
        items = [_show_raw(decl, s, f"{v}[{i}]", renderers) for i, s in enumerate(shape.items)]
        return '"(" + ' + ' + ", " + '.join(items) + ' + ")"'
    if isinstance(shape, External) and not shape.corec and shape.name in renderers:
        return renderers[shape.name](v)
    raise UnsupportedShape(f"show: no renderer for {shape.name} in {decl.name}", shape.name)


def show_body(decl: TypeDecl, ctor: CtorDecl,
              renderers: Mapping[str, Callable[[str], str]] | None = None) -> str:
    renderers = SHOW_RENDERERS if renderers is None else renderers
    label = _ctor_label(ctor)
    if not ctor.args:
        return f'return "{label}"'
    parts = []
    for i, shape in enumerate(ctor.args, 1):
        rule = augmentation_rule(shape)
        if rule == 1 and isinstance(shape, ParamRef):
            parts.append(f"s.tp.{shape.name}(inh, p{i}.x)")
        elif rule in (1, 2):
            parts.append(f"p{i}.fx(inh)")
        else:
            parts.append(_show_raw(decl, shape, f"p{i}", renderers))
    return f'return "{label} (" + ' + ' + ", " + '.join(parts) + ' + ")"'


def show_plugin(renderers: Mapping[str, Callable[[str], str]] | None = None) -> Plugin:
    """A show plugin; ``renderers`` extends the primitive renderer registry."""
    table = {**SHOW_RENDERERS, **(renderers or {})}
    return Plugin(
        name="show",
        signature=lambda d: ("None", "str", ("str",) * len(d.params)),
        method_body=lambda d, c: show_body(d, c, table),
        doc="Renders values as `Ctor (arg, ..., arg)`.",
    )


def foldl_body(decl: TypeDecl, ctor: CtorDecl) -> str:
    acc = "inh"
    for i, shape in enumerate(ctor.args, 1):
        if augmentation_rule(shape) != 3:
            acc = f"p{i}.fx({acc})"
    return f"return {acc}"


def _map_raw(shape, v: str) -> str:
    if isinstance(shape, ParamRef):
        return f"s.tp.{shape.name}(inh, {v})"
    if isinstance(shape, SelfRef):
        return f"s.f(inh, {v})"
    if isinstance(shape, TupleShape) and _mentions_params(shape):
        items = [_map_raw(s, f"{v}[{i}]") for i, s in enumerate(shape.items)]
        return "(" + ", ".join(items) + ("," if len(items) == 1 else "") + ")"
    return v


def _mentions_params(shape) -> bool:
    if isinstance(shape, (ParamRef, SelfRef)):
        return True
    if isinstance(shape, TupleShape):
        return any(_mentions_params(s) for s in shape.items)
    return False


def map_body(decl: TypeDecl, ctor: CtorDecl) -> str:
    args = []
    for i, shape in enumerate(ctor.args, 1):
        rule = augmentation_rule(shape)
        if rule == 1 and isinstance(shape, ParamRef):
            args.append(f"s.tp.{shape.name}(inh, p{i}.x)")
        elif rule in (1, 2):
            args.append(f"p{i}.fx(inh)")
        else:
            args.append(_map_raw(shape, f"p{i}"))
    if is_poly(decl):
        inner = "(" + ", ".join(args) + ("," if len(args) == 1 else "") + ")"
        return f'return gt.Variant("{ctor.name}", {inner})' if args else f'return gt.Variant("{ctor.name}")'
    return f"return {ctor.name}(" + ", ".join(args) + ")"


SHOW = register_plugin(show_plugin())

FOLDL = register_plugin(Plugin(
    name="foldl",
    signature=lambda d: ("typing.Any", "typing.Any", ("typing.Any",) * len(d.params)),
    method_body=foldl_body,
    doc="Threads the inherited attribute left to right through every augmented argument.",
))

MAP = register_plugin(Plugin(
    name="map",
    signature=lambda d: ("None", "typing.Any", ("typing.Any",) * len(d.params)),
    method_body=map_body,
    needs_ctors=True,
    doc="Rebuilds the value, mapping type-parameter positions.",
))
