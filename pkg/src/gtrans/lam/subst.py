"""Fresh-name generation and capture-avoiding substitution."""
from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping

from ..generated.lam_gen import App, Lam, Var, lam_gcata, lam_t
from .terms import Term, free_vars

__all__ = ["NameGen", "Substitutor", "subst"]


class NameGen:
    """Produces names absent from ``taken`` by appending primes, and remembers them."""

    def __init__(self, taken: Iterable[str] = ()):
        self.taken = set(taken)
        self.produced: list[str] = []

    def __call__(self, x: str) -> str:
        n = x + "'"
        while n in self.taken:
            n += "'"
        self.taken.add(n)
        self.produced.append(n)
        return n


class Substitutor:
    """Inherited attribute of substitution: pending binder renames.

    ``prohibited`` are the free variables of the payload; a binder among
    them is renamed on the way down. ``live`` turns off once the substituted
    variable is shadowed, leaving only the pending renames to apply.
    """

    __slots__ = ("gen", "prohibited", "renames", "live")

    def __init__(self, gen: NameGen, prohibited: frozenset[str],
                 renames: Mapping[str, str] = MappingProxyType({}), live: bool = True):
        self.gen = gen
        self.prohibited = prohibited
        self.renames = renames
        self.live = live

    def subst(self, x: str) -> str:
        return self.renames.get(x, x)

    def rename(self, x: str) -> tuple[str, Substitutor]:
        if x in self.prohibited:
            x2 = self.gen(x)
            return x2, Substitutor(self.gen, self.prohibited, {**self.renames, x: x2}, self.live)
        return x, self

    def shadowed(self) -> Substitutor:
        return Substitutor(self.gen, self.prohibited, self.renames, False)


class _Substitution(lam_t):
    def __init__(self, x: str, payload: Term):
        self.x = x
        self.payload = payload

    def c_Var(self, s, _, y):
        if s.live and y == self.x:
            return self.payload
        return Var(s.subst(y))

    def c_Lam(self, s, z, y, body):
        if y == self.x:
            if not s.renames:
                return z.x
            y2, s2 = s.rename(y)
            return Lam(y2, body.fx(s2.shadowed()))
        y2, s2 = s.rename(y)
        return Lam(y2, body.fx(s2))

    def c_App(self, s, _, f, a):
        return App(f.fx(s), a.fx(s))


def subst(gen: NameGen, x: str, payload: Term, body: Term) -> Term:
    """``body[x := payload]``; binders free in ``payload`` are renamed through ``gen``."""
    return lam_gcata(_Substitution(x, payload), Substitutor(gen, free_vars(payload)), body)
