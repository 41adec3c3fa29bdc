# Generated by gtrans 0.1.0: plugin foldl for var.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .var_gen import var_t


class foldl_var(var_t[typing.Any, typing.Any]):
    """Threads the inherited attribute left to right through every augmented argument."""

    def c_Var(self, inh, s, p1):
        return inh
