# Generated by gtrans 0.1.0: plugin map for var.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .var_gen import var_t


class map_var(var_t[None, typing.Any]):
    """Rebuilds the value, mapping type-parameter positions."""

    def c_Var(self, inh, s, p1):
        return gt.Variant("Var", (p1,))
