"""Runtime support shared by generated traversals and transformation objects."""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Callable, Generic, Mapping, TypeVar

__all__ = [
    "Aug", "ParamBundle", "Transformer", "Trait", "UnknownHandler", "Variant",
    "make_aug", "extend", "delegation_chain", "transform",
]

Inh = TypeVar("Inh")
Val = TypeVar("Val")
Syn = TypeVar("Syn")


class ParamBundle:
    """Transformations for the type parameters of a type, addressed by parameter name.

    ``tp.a`` is the transformation for ``'a``. Bundles are immutable.
    """

    __slots__ = ("_fns",)

    def __init__(self, **fns: Callable[[Any, Any], Any]):
        object.__setattr__(self, "_fns", MappingProxyType(dict(fns)))

    def __getattr__(self, name: str):
        try:
            return self._fns[name]
        except KeyError:
            raise AttributeError(f"no transformation for type parameter {name!r}") from None

    def __setattr__(self, name, value):
        raise AttributeError("ParamBundle is immutable")

    def __getitem__(self, name: str):
        return self._fns[name]

    def names(self) -> tuple[str, ...]:
        return tuple(self._fns)

    def __len__(self) -> int:
        return len(self._fns)

    def __repr__(self) -> str:
        return f"ParamBundle({', '.join(self._fns)})"


EMPTY_BUNDLE = ParamBundle()


@dataclass(frozen=True, eq=False)
class Aug(Generic[Inh, Val, Syn]):
    """A value packaged with the transformation for its type.

    ``fx`` is ``f`` already applied to ``x``; ``tp`` holds the transformations
    for the host type's parameters.
    """

    x: Val
    f: Callable[[Inh, Val], Syn]
    fx: Callable[[Inh], Syn] = field(repr=False)
    tp: ParamBundle = field(repr=False)


def make_aug(value, f, tp: ParamBundle = EMPTY_BUNDLE) -> Aug:
    return Aug(value, f, lambda inh: f(inh, value), tp)


@dataclass(frozen=True)
class Variant:
    """A value of an open sum: a constructor tag with positional arguments.

    Tags are structural, so the same ``Variant("Add", ...)`` value is accepted
    by every open sum whose constructor set contains ``Add``.
    """

    tag: str
    args: tuple = ()

    def __repr__(self):
        if not self.args:
            return f"`{self.tag}"
        return f"`{self.tag}(" + ", ".join(map(repr, self.args)) + ")"


class UnknownHandler(AttributeError):
    pass


class Transformer:
    """Base class of all transformation objects.

    Handlers are methods named ``c_<Ctor>`` taking ``(inh, s, *args)`` where
    ``s`` is the augmented subject. Lookup goes through the class hierarchy
    at call time, so overriding a handler in a subclass (or with
    :func:`extend`) changes every dispatch, including recursive ones.
    """

    def handler_names(self) -> tuple[str, ...]:
        return tuple(sorted(n for n in dir(type(self))
                            if n.startswith("c_") and callable(getattr(type(self), n))))


@dataclass(frozen=True)
class Trait:
    """A named partial handler table."""

    name: str
    handlers: Mapping[str, Callable] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "handlers", MappingProxyType(dict(self.handlers)))


def extend(base, overrides: Mapping[str, Callable] | Trait, name: str | None = None):
    """Return ``base`` with some handlers replaced.

    ``base`` is a transformer class or instance; the result is of the same
    kind. Override functions take ``self`` first, like methods, and ``self``
    is always the outermost extension, which gives open recursion.
    """
    if isinstance(overrides, Trait):
        label = name or overrides.name
        table = dict(overrides.handlers)
    else:
        label = name
        table = dict(overrides)
    cls = base if isinstance(base, type) else type(base)
    unknown = sorted(k for k in table if not callable(getattr(cls, k, None)))
    if unknown:
        raise UnknownHandler(f"{cls.__name__} has no handler(s) {', '.join(unknown)}")
    ns = dict(table)
    ns["__overrides__"] = MappingProxyType(table)
    ns["__trait__"] = label
    ns["__module__"] = cls.__module__
    new = type(label or f"{cls.__name__}+", (cls,), ns)
    if isinstance(base, type):
        return new
    obj = object.__new__(new)
    if hasattr(base, "__dict__"):
        obj.__dict__.update(vars(base))
    return obj


def delegation_chain(t) -> list[tuple[str, tuple[str, ...]]]:
    """Describe how ``t`` was assembled, most recent extension first.

    Each entry is ``(label, handler names defined at that level)``.
    """
    cls = t if isinstance(t, type) else type(t)
    out = []
    for k in cls.__mro__:
        if k is object:
            break
        own = vars(k)
        if "__overrides__" in own:
            out.append((own.get("__trait__") or k.__name__, tuple(sorted(own["__overrides__"]))))
        else:
            names = tuple(sorted(n for n, v in own.items()
                                 if callable(v) and not n.startswith("__")))
            out.append((k.__name__, names))
    return out


def transform(gcata: Callable, *args) -> Callable:
    """Partially apply a traversal: ``transform(lam_gcata, show_lam())(inh, value)``."""
    def run(inh, subj):
        return gcata(*args, inh, subj)
    return run
