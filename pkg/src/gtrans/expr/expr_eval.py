"""The composed evaluator: no new cases, only the two fragments inherited together."""
from __future__ import annotations

from typing import Callable, Mapping

from ..generated.expr_gen import expr_gcata, expr_t
from .arith_eval import arith_eval
from .var_eval import var_eval

Env = Callable[[str], int]


class UnboundVariable(LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound variable {name}")


class expr_eval(var_eval, arith_eval, expr_t):
    pass


_EVAL = expr_eval()


def env_of(bindings: Mapping[str, int]) -> Env:
    def lookup(x: str) -> int:
        try:
            return bindings[x]
        except KeyError:
            raise UnboundVariable(x) from None
    return lookup


def eval_(env: Env, e) -> int:
    # The parameter function is eval_ itself: 'a expr is closed up to 'a = expr.
    return expr_gcata(eval_, _EVAL, env, e)


def evaluate(e, bindings: Mapping[str, int] | None = None) -> int:
    return eval_(env_of(bindings or {}), e)
