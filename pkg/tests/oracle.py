"""Reference implementations used as test oracles.

Everything here is written directly by recursion over terms and shares no
code with the transformer-based engine: Sestoft's seven big-step strategies,
capture-avoiding substitution, de Bruijn conversion and one-step reduction.
"""
from __future__ import annotations

import itertools

from gtrans.generated.lam_gen import App, Lam, Var


class OutOfFuel(Exception):
    pass


def free(t) -> set[str]:
    match t:
        case Var(x):
            return {x}
        case App(f, a):
            return free(f) | free(a)
        case Lam(x, b):
            return free(b) - {x}


def names(t) -> set[str]:
    match t:
        case Var(x):
            return {x}
        case App(f, a):
            return names(f) | names(a)
        case Lam(x, b):
            return {x} | names(b)


_counter = itertools.count()


def fresh(avoid: set[str]) -> str:
    while True:
        n = f"v{next(_counter)}#"
        if n not in avoid:
            return n


def substitute(t, x: str, m):
    """t[x := m], renaming binders that would capture free variables of m."""
    match t:
        case Var(y):
            return m if y == x else t
        case App(f, a):
            return App(substitute(f, x, m), substitute(a, x, m))
        case Lam(y, b):
            if y == x:
                return t
            if y in free(m) and x in free(b):
                z = fresh(free(m) | names(b) | {x})
                b = substitute(b, y, Var(z))
                y = z
            return Lam(y, substitute(b, x, m))


def to_debruijn(t, env=()):
    match t:
        case Var(x):
            for i, y in enumerate(env):
                if y == x:
                    return ("b", i)
            return ("f", x)
        case App(f, a):
            return ("@", to_debruijn(f, env), to_debruijn(a, env))
        case Lam(x, b):
            return ("\\", to_debruijn(b, (x,) + env))


def alpha_equal(a, b) -> bool:
    return to_debruijn(a) == to_debruijn(b)


class Machine:
    """Sestoft's seven strategies, one method each, with a shared beta-step budget."""

    def __init__(self, fuel: int = 10_000):
        self.fuel = fuel
        self.steps = 0

    def beta(self, x, body, arg):
        self.steps += 1
        if self.steps > self.fuel:
            raise OutOfFuel
        return substitute(body, x, arg)

    def bn(self, t):
        match t:
            case App(e1, e2):
                f = self.bn(e1)
                if isinstance(f, Lam):
                    return self.bn(self.beta(f._1, f._2, e2))
                return App(f, e2)
        return t

    def nor(self, t):
        match t:
            case Lam(x, e):
                return Lam(x, self.nor(e))
            case App(e1, e2):
                f = self.bn(e1)
                if isinstance(f, Lam):
                    return self.nor(self.beta(f._1, f._2, e2))
                return App(self.nor(f), self.nor(e2))
        return t

    def bv(self, t):
        match t:
            case App(e1, e2):
                f = self.bv(e1)
                a = self.bv(e2)
                if isinstance(f, Lam):
                    return self.bv(self.beta(f._1, f._2, a))
                return App(f, a)
        return t

    def ao(self, t):
        match t:
            case Lam(x, e):
                return Lam(x, self.ao(e))
            case App(e1, e2):
                f = self.ao(e1)
                a = self.ao(e2)
                if isinstance(f, Lam):
                    return self.ao(self.beta(f._1, f._2, a))
                return App(f, a)
        return t

    def he(self, t):
        match t:
            case Lam(x, e):
                return Lam(x, self.he(e))
            case App(e1, e2):
                f = self.he(e1)
                if isinstance(f, Lam):
                    return self.he(self.beta(f._1, f._2, e2))
                return App(f, e2)
        return t

    def hn(self, t):
        match t:
            case Lam(x, e):
                return Lam(x, self.hn(e))
            case App(e1, e2):
                f = self.he(e1)
                if isinstance(f, Lam):
                    return self.hn(self.beta(f._1, f._2, e2))
                return App(self.hn(f), self.hn(e2))
        return t

    def ha(self, t):
        match t:
            case Lam(x, e):
                return Lam(x, self.ha(e))
            case App(e1, e2):
                f = self.bv(e1)
                if isinstance(f, Lam):
                    a = self.ha(e2)
                    return self.ha(self.beta(f._1, f._2, a))
                return App(self.ha(f), self.ha(e2))
        return t


def reference_reduce(strategy: str, t, fuel: int = 10_000):
    return getattr(Machine(fuel), strategy)(t)


def one_step_reducts(t):
    """Every term obtained from ``t`` by contracting exactly one beta-redex."""
    out = []
    match t:
        case Var(_):
            pass
        case Lam(x, b):
            out += [Lam(x, r) for r in one_step_reducts(b)]
        case App(f, a):
            if isinstance(f, Lam):
                out.append(substitute(f._2, f._1, a))
            out += [App(r, a) for r in one_step_reducts(f)]
            out += [App(f, r) for r in one_step_reducts(a)]
    return out


def is_beta_normal(t) -> bool:
    return not one_step_reducts(t)


def leaves(t) -> list[str]:
    match t:
        case Var(x):
            return [x]
        case App(f, a):
            return leaves(f) + leaves(a)
        case Lam(_, b):
            return leaves(b)


def node_count(t) -> int:
    match t:
        case Var(_):
            return 1
        case App(f, a):
            return 1 + node_count(f) + node_count(a)
        case Lam(_, b):
            return 1 + node_count(b)


def church(n: int):
    body = Var("x")
    for _ in range(n):
        body = App(Var("f"), body)
    return Lam("f", Lam("x", body))


PLUS = Lam("m", Lam("n", Lam("f", Lam("x", App(App(Var("m"), Var("f")),
                                                   App(App(Var("n"), Var("f")), Var("x")))))))
MULT = Lam("m", Lam("n", Lam("f", App(Var("m"), App(Var("n"), Var("f"))))))
