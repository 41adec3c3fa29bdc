# Generated by gtrans 0.1.0: plugin map for t.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .t_gen import A, B, T, t_t


class map_t(t_t[typing.Any, typing.Any, typing.Any, typing.Any, None, typing.Any]):
    """Rebuilds the value, mapping type-parameter positions."""

    def c_A(self, inh, s, p1):
        return A(s.tp.a(inh, p1.x))

    def c_B(self, inh, s, p1):
        return B(s.tp.b(inh, p1.x))

    def c_T(self, inh, s, p1):
        return T(p1.fx(inh))
