# Generated by gtrans 0.1.0: plugin foldl for t.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .t_gen import t_t


class foldl_t(t_t[typing.Any, typing.Any, typing.Any, typing.Any, typing.Any, typing.Any]):
    """Threads the inherited attribute left to right through every augmented argument."""

    def c_A(self, inh, s, p1):
        return p1.fx(inh)

    def c_B(self, inh, s, p1):
        return p1.fx(inh)

    def c_T(self, inh, s, p1):
        return p1.fx(inh)
