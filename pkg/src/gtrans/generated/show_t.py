# Generated by gtrans 0.1.0: plugin show for t.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .t_gen import t_t


class show_t(t_t[typing.Any, str, typing.Any, str, None, str]):
    """Renders values as `Ctor (arg, ..., arg)`."""

    def c_A(self, inh, s, p1):
        return "A (" + s.tp.a(inh, p1.x) + ")"

    def c_B(self, inh, s, p1):
        return "B (" + s.tp.b(inh, p1.x) + ")"

    def c_T(self, inh, s, p1):
        return "T (" + p1.fx(inh) + ")"
