# Generated by gtrans 0.1.0 from:
#   type 'a arith = [ `Add of 'a * 'a | `Mul of 'a * 'a ]
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


def arith_gcata(fa, trans, inh, subj):
    self = functools.partial(arith_gcata, fa, trans)
    tpo = gt.ParamBundle(a=fa)
    match subj:
        case gt.Variant("Add", (p1, p2)):
            return trans.c_Add(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, fa, tpo), gt.make_aug(p2, fa, tpo))
        case gt.Variant("Mul", (p1, p2)):
            return trans.c_Mul(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, fa, tpo), gt.make_aug(p2, fa, tpo))
    raise TypeError(f"arith_gcata: not a value of type arith: {subj!r}")


class arith_t(gt.Transformer, typing.Generic[a, ta, inh, syn]):
    """Abstract transformer for arith."""

    def c_Add(self, inh: inh, s: gt.Aug, p1: gt.Aug, p2: gt.Aug) -> syn:
        raise NotImplementedError

    def c_Mul(self, inh: inh, s: gt.Aug, p1: gt.Aug, p2: gt.Aug) -> syn:
        raise NotImplementedError
