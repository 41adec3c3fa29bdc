# Generated by gtrans 0.1.0: plugin show for lam.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .lam_gen import lam_t


class show_lam(lam_t[None, str]):
    """Renders values as `Ctor (arg, ..., arg)`."""

    def c_Var(self, inh, s, p1):
        return "Var (" + p1 + ")"

    def c_App(self, inh, s, p1, p2):
        return "App (" + p1.fx(inh) + ", " + p2.fx(inh) + ")"

    def c_Lam(self, inh, s, p1, p2):
        return "Lam (" + p1 + ", " + p2.fx(inh) + ")"
