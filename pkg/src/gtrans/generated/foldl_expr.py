# Generated by gtrans 0.1.0: plugin foldl for expr.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .expr_gen import expr_t


class foldl_expr(expr_t[typing.Any, typing.Any, typing.Any, typing.Any]):
    """Threads the inherited attribute left to right through every augmented argument."""

    def c_Var(self, inh, s, p1):
        return inh

    def c_Add(self, inh, s, p1, p2):
        return p2.fx(p1.fx(inh))

    def c_Mul(self, inh, s, p1, p2):
        return p2.fx(p1.fx(inh))
