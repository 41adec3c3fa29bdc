# Generated by gtrans 0.1.0: plugin map for arith.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .arith_gen import arith_t


class map_arith(arith_t[typing.Any, typing.Any, None, typing.Any]):
    """Rebuilds the value, mapping type-parameter positions."""

    def c_Add(self, inh, s, p1, p2):
        return gt.Variant("Add", (s.tp.a(inh, p1.x), s.tp.a(inh, p2.x)))

    def c_Mul(self, inh, s, p1, p2):
        return gt.Variant("Mul", (s.tp.a(inh, p1.x), s.tp.a(inh, p2.x)))
