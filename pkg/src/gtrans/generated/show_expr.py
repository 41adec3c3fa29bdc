# Generated by gtrans 0.1.0: plugin show for expr.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .expr_gen import expr_t


class show_expr(expr_t[typing.Any, str, None, str]):
    """Renders values as `Ctor (arg, ..., arg)`."""

    def c_Var(self, inh, s, p1):
        return "`Var (" + p1 + ")"

    def c_Add(self, inh, s, p1, p2):
        return "`Add (" + s.tp.a(inh, p1.x) + ", " + s.tp.a(inh, p2.x) + ")"

    def c_Mul(self, inh, s, p1, p2):
        return "`Mul (" + s.tp.a(inh, p1.x) + ", " + s.tp.a(inh, p2.x) + ")"
