# Generated by gtrans 0.1.0: plugin foldl for lam.
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import typing

from gtrans import runtime as gt

from .lam_gen import lam_t


class foldl_lam(lam_t[typing.Any, typing.Any]):
    """Threads the inherited attribute left to right through every augmented argument."""

    def c_Var(self, inh, s, p1):
        return inh

    def c_App(self, inh, s, p1, p2):
        return p2.fx(p1.fx(inh))

    def c_Lam(self, inh, s, p1, p2):
        return p2.fx(inh)
