"""Seven reduction strategies assembled from reusable traits.

A strategy is a transformer over terms. The base reducer implements the
application case once: it reduces the operator with ``head``; on an
abstraction it prepares the argument with ``subst_arg``, substitutes and
reduces the contractum again with the whole strategy, otherwise it reduces
the operator result again and the argument with ``arg``. Traits fix
``head``/``arg``/``subst_arg`` and the abstraction case; strategies are
traits stacked with :func:`gtrans.runtime.extend`, last one winning.

The same traits also build the tracing strategies, whose inherited
attribute carries the context of the current redex as a term with a hole.
"""
from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from typing import Callable

from ..generated.lam_gen import App, Lam, lam_gcata, lam_t
from ..runtime import Trait, extend
from .subst import NameGen, subst
from .terms import Term, binders, term_vars

__all__ = [
    "FuelExhausted", "Budget", "SimpleCtx", "TraceCtx", "Strategy",
    "Reducer", "TracingReducer", "TRAITS", "STRATEGY_NAMES", "STRATEGY_TITLES",
    "build_strategies", "STRATEGIES", "TRACING_STRATEGIES",
    "reduce", "reduce_with_trace", "default_context", "DEFAULT_FUEL",
]

DEFAULT_FUEL = 10_000


class FuelExhausted(Exception):
    def __init__(self, steps: int, trace: list[Term] | None = None):
        self.steps = steps
        self.trace = trace or []
        super().__init__(f"gave up after {steps} beta-steps")


@dataclass
class Budget:
    """Beta-step counter for one run; also collects snapshots when tracing."""

    fuel: int = DEFAULT_FUEL
    steps: int = 0
    snapshots: list[Term] | None = None

    def step(self) -> None:
        if self.steps >= self.fuel:
            raise FuelExhausted(self.steps, self.snapshots)
        self.steps += 1

    def record(self, term: Term) -> None:
        if self.snapshots is not None:
            self.snapshots.append(term)


@dataclass(frozen=True)
class SimpleCtx:
    gen: NameGen
    budget: Budget = field(default_factory=Budget)


def _identity(t: Term) -> Term:
    return t


@dataclass(frozen=True)
class TraceCtx:
    gen: NameGen
    hole: Callable[[Term], Term] = _identity
    budget: Budget = field(default_factory=lambda: Budget(snapshots=[]))

    def within(self, frame: Callable[[Term], Term]) -> TraceCtx:
        outer = self.hole
        return replace(self, hole=lambda e: outer(frame(e)))


# -- terms with a hole -----------------------------------------------------

def appl(arg: Term) -> Callable[[Term], Term]:
    """Hole in operator position: ``[] arg``."""
    return lambda e: App(e, arg)


def appr(fun: Term) -> Callable[[Term], Term]:
    """Hole in argument position: ``fun []``."""
    return lambda e: App(fun, e)


def abst(x: str) -> Callable[[Term], Term]:
    return lambda e: Lam(x, e)


# -- base reducers ---------------------------------------------------------

class Reducer(lam_t):
    def head(self, c, x):
        return x.fx(c)

    def arg(self, c, x):
        raise NotImplementedError

    def subst_arg(self, c, x):
        raise NotImplementedError

    def c_Var(self, c, s, x):
        return s.x

    def c_App(self, c, s, l, m):
        match self.head(c, l):
            case Lam(x, body):
                a = self.subst_arg(c, m)
                c.budget.step()
                return s.f(c, subst(c.gen, x, a, body))
            case l1:
                l2 = s.f(c, l1)
                return App(l2, self.arg(c, m))


class TracingReducer(lam_t):
    def head(self, c, x):
        return x.fx(c)

    def arg(self, c, x):
        raise NotImplementedError

    def subst_arg(self, c, x):
        raise NotImplementedError

    def c_Var(self, c, s, x):
        return s.x

    def c_App(self, c, s, l, m):
        match self.head(c.within(appl(m.x)), l):
            case Lam(x, body) as f:
                a = self.subst_arg(c.within(appr(f)), m)
                c.budget.step()
                contractum = subst(c.gen, x, a, body)
                c.budget.record(c.hole(contractum))
                return s.f(c, contractum)
            case l1:
                l2 = s.f(c.within(appl(m.x)), l1)
                return App(l2, self.arg(c.within(appr(l2)), m))


REDUCE_UNDER_ABSTRACTIONS = Trait("reduce_under_abstractions", {
    "c_Lam": lambda self, c, s, x, l: Lam(x, l.fx(c)),
})

TRACING_REDUCE_UNDER_ABSTRACTIONS = Trait("reduce_under_abstractions", {
    "c_Lam": lambda self, c, s, x, l: Lam(x, l.fx(c.within(abst(x)))),
})

DONT_REDUCE_UNDER_ABSTRACTIONS = Trait("dont_reduce_under_abstractions", {
    "c_Lam": lambda self, c, s, x, l: s.x,
})

REDUCE_ARGUMENTS = Trait("reduce_arguments", {"arg": lambda self, c, x: x.fx(c)})

DONT_REDUCE_ARGUMENTS = Trait("dont_reduce_arguments", {"arg": lambda self, c, x: x.x})

NON_STRICT = Trait("non_strict", {"subst_arg": lambda self, c, m: m.x})

STRICT = Trait("strict", {"subst_arg": lambda self, c, m: m.fx(c)})

TRAITS = {t.name: t for t in (REDUCE_UNDER_ABSTRACTIONS, DONT_REDUCE_UNDER_ABSTRACTIONS,
                              REDUCE_ARGUMENTS, DONT_REDUCE_ARGUMENTS, NON_STRICT, STRICT)}

STRATEGY_NAMES = ("bn", "nor", "bv", "ao", "ha", "he", "hn")
STRATEGY_TITLES = {
    "bn": "Call-by-name",
    "nor": "Normal Order",
    "bv": "Call-by-value",
    "ao": "Applicative",
    "ha": "Hybrid Applicative",
    "he": "Head Spine",
    "hn": "Hybrid Normal Order",
}


@dataclass(frozen=True)
class Strategy:
    name: str
    transformer: lam_t

    def __call__(self, ctx, term: Term) -> Term:
        return lam_gcata(self.transformer, ctx, term)


def _define(name: str, base, *traits, **own):
    for t in traits:
        base = extend(base, t)
    return extend(base, own, name=name)


def build_strategies(reducer: type, reduce_under_abstractions: Trait) -> dict[str, Strategy]:
    """Assemble the seven strategies over a base reducer and its abstraction trait."""
    table: dict[str, Strategy] = {}

    def head_by(name: str):
        return lambda self, c, x: table[name](c, x.x)

    rua = reduce_under_abstractions
    call_by_name = _define("call_by_name", reducer,
                           DONT_REDUCE_UNDER_ABSTRACTIONS, DONT_REDUCE_ARGUMENTS, NON_STRICT)
    normal = _define("normal", reducer, rua, REDUCE_ARGUMENTS, NON_STRICT, head=head_by("bn"))
    call_by_value = _define("call_by_value", reducer,
                            DONT_REDUCE_UNDER_ABSTRACTIONS, REDUCE_ARGUMENTS, STRICT)
    applicative = _define("applicative", call_by_value, rua)
    hybrid_applicative = _define("hybrid_applicative", applicative, head=head_by("bv"))
    head_spine = _define("head_spine", call_by_name, rua)
    hybrid_normal = _define("hybrid_normal", normal, head=head_by("he"))

    for name, cls in zip(STRATEGY_NAMES, (call_by_name, normal, call_by_value, applicative,
                                          hybrid_applicative, head_spine, hybrid_normal)):
        table[name] = Strategy(name, cls())
    return table


STRATEGIES = build_strategies(Reducer, REDUCE_UNDER_ABSTRACTIONS)
TRACING_STRATEGIES = build_strategies(TracingReducer, TRACING_REDUCE_UNDER_ABSTRACTIONS)


def default_context(t: Term, fuel: int = DEFAULT_FUEL) -> SimpleCtx:
    return SimpleCtx(NameGen(term_vars(t) | binders(t)), Budget(fuel))


@contextmanager
def _deep_recursion(limit: int = 20_000):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _lookup(strategy: str | Strategy, table: dict[str, Strategy]) -> Strategy:
    name = strategy.name if isinstance(strategy, Strategy) else strategy
    try:
        return table[name]
    except KeyError:
        raise ValueError(f"unknown strategy {name!r}; expected one of {', '.join(STRATEGY_NAMES)}") from None


def reduce(strategy: str | Strategy, t: Term, fuel: int = DEFAULT_FUEL) -> Term:
    s = _lookup(strategy, STRATEGIES)
    with _deep_recursion():
        return s(default_context(t, fuel), t)


def reduce_with_trace(strategy: str | Strategy, t: Term,
                      fuel: int = DEFAULT_FUEL) -> tuple[Term, list[Term]]:
    """Reduce ``t`` and list the whole term after every beta-step."""
    s = _lookup(strategy, TRACING_STRATEGIES)
    ctx = TraceCtx(NameGen(term_vars(t) | binders(t)), budget=Budget(fuel, snapshots=[]))
    with _deep_recursion():
        result = s(ctx, t)
    return result, ctx.budget.snapshots
