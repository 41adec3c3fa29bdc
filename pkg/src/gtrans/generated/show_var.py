# Generated by gtrans 0.1.0: plugin show for var.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .var_gen import var_t


class show_var(var_t[None, str]):
    """Renders values as `Ctor (arg, ..., arg)`."""

    def c_Var(self, inh, s, p1):
        return "`Var (" + p1 + ")"
