# Generated by gtrans 0.1.0 from:
#   type var = [ `Var of string ]
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import dataclasses
import functools
import typing

from gtrans import runtime as gt


inh = typing.TypeVar("inh")
syn = typing.TypeVar("syn")


def var_gcata(trans, inh, subj):
    self = functools.partial(var_gcata, trans)
    tpo = gt.ParamBundle()
    match subj:
        case gt.Variant("Var", (p1,)):
            return trans.c_Var(inh, gt.make_aug(subj, self, tpo), p1)
    raise TypeError(f"var_gcata: not a value of type var: {subj!r}")


class var_t(gt.Transformer, typing.Generic[inh, syn]):
    """Abstract transformer for var."""

    def c_Var(self, inh: inh, s: gt.Aug, p1: str) -> syn:
        raise NotImplementedError
