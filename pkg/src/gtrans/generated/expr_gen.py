# Generated by gtrans 0.1.0 from:
#   type 'a expr = [ var | 'a arith ]
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import dataclasses
import functools
import typing

from gtrans import runtime as gt


a = typing.TypeVar("a")
ta = typing.TypeVar("ta")
inh = typing.TypeVar("inh")
syn = typing.TypeVar("syn")


def expr_gcata(fa, trans, inh, subj):
    self = functools.partial(expr_gcata, fa, trans)
    tpo = gt.ParamBundle(a=fa)
    match subj:
        case gt.Variant("Var", (p1,)):
            return trans.c_Var(inh, gt.make_aug(subj, self, tpo), p1)
        case gt.Variant("Add", (p1, p2)):
            return trans.c_Add(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, fa, tpo), gt.make_aug(p2, fa, tpo))
        case gt.Variant("Mul", (p1, p2)):
            return trans.c_Mul(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, fa, tpo), gt.make_aug(p2, fa, tpo))
    raise TypeError(f"expr_gcata: not a value of type expr: {subj!r}")


class expr_t(gt.Transformer, typing.Generic[a, ta, inh, syn]):
    """Abstract transformer for expr."""

    def c_Var(self, inh: inh, s: gt.Aug, p1: str) -> syn:
        raise NotImplementedError

    def c_Add(self, inh: inh, s: gt.Aug, p1: gt.Aug, p2: gt.Aug) -> syn:
        raise NotImplementedError

    def c_Mul(self, inh: inh, s: gt.Aug, p1: gt.Aug, p2: gt.Aug) -> syn:
        raise NotImplementedError
