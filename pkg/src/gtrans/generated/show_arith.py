# Generated by gtrans 0.1.0: plugin show for arith.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .arith_gen import arith_t


class show_arith(arith_t[typing.Any, str, None, str]):
    """Renders values as `Ctor (arg, ..., arg)`."""

    def c_Add(self, inh, s, p1, p2):
        return "`Add (" + s.tp.a(inh, p1.x) + ", " + s.tp.a(inh, p2.x) + ")"

    def c_Mul(self, inh, s, p1, p2):
        return "`Mul (" + s.tp.a(inh, p1.x) + ", " + s.tp.a(inh, p2.x) + ")"
