# Generated by gtrans 0.1.0 from:
#   type lam = Var of string | App of lam * lam | Lam of string * lam
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import dataclasses
import functools
import typing

from gtrans import runtime as gt


inh = typing.TypeVar("inh")
syn = typing.TypeVar("syn")


@dataclasses.dataclass(frozen=True)
class Var:
    _1: str


@dataclasses.dataclass(frozen=True)
class App:
    _1: lam
    _2: lam


@dataclasses.dataclass(frozen=True)
class Lam:
    _1: str
    _2: lam


lam = Var | App | Lam


def lam_gcata(trans, inh, subj):
    self = functools.partial(lam_gcata, trans)
    tpo = gt.ParamBundle()
    match subj:
        case Var(p1):
            return trans.c_Var(inh, gt.make_aug(subj, self, tpo), p1)
        case App(p1, p2):
            return trans.c_App(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, self, tpo), gt.make_aug(p2, self, tpo))
        case Lam(p1, p2):
            return trans.c_Lam(inh, gt.make_aug(subj, self, tpo), p1, gt.make_aug(p2, self, tpo))
    raise TypeError(f"lam_gcata: not a value of type lam: {subj!r}")


class lam_t(gt.Transformer, typing.Generic[inh, syn]):
    """Abstract transformer for lam."""

    def c_Var(self, inh: inh, s: gt.Aug, p1: str) -> syn:
        raise NotImplementedError

    def c_App(self, inh: inh, s: gt.Aug, p1: gt.Aug, p2: gt.Aug) -> syn:
        raise NotImplementedError

    def c_Lam(self, inh: inh, s: gt.Aug, p1: str, p2: gt.Aug) -> syn:
        raise NotImplementedError
