# Generated by gtrans 0.1.0 from:
#   type ('a, 'b) t = A of 'a | B of 'b | T of ('a, 'b) t
# Do not edit; regenerate with `gtrans gen`.
from __future__ import annotations

import dataclasses
import functools
import typing

from gtrans import runtime as gt


a = typing.TypeVar("a")
ta = typing.TypeVar("ta")
b = typing.TypeVar("b")
tb = typing.TypeVar("tb")
inh = typing.TypeVar("inh")
syn = typing.TypeVar("syn")


@dataclasses.dataclass(frozen=True)
class A:
    _1: a


@dataclasses.dataclass(frozen=True)
class B:
    _1: b


@dataclasses.dataclass(frozen=True)
class T:
    _1: t


t = A | B | T


def t_gcata(fa, fb, trans, inh, subj):
    self = functools.partial(t_gcata, fa, fb, trans)
    tpo = gt.ParamBundle(a=fa, b=fb)
    match subj:
        case A(p1):
            return trans.c_A(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, fa, tpo))
        case B(p1):
            return trans.c_B(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, fb, tpo))
        case T(p1):
            return trans.c_T(inh, gt.make_aug(subj, self, tpo), gt.make_aug(p1, self, tpo))
    raise TypeError(f"t_gcata: not a value of type t: {subj!r}")


class t_t(gt.Transformer, typing.Generic[a, ta, b, tb, inh, syn]):
    """Abstract transformer for t."""

    def c_A(self, inh: inh, s: gt.Aug, p1: gt.Aug) -> syn:
        raise NotImplementedError

    def c_B(self, inh: inh, s: gt.Aug, p1: gt.Aug) -> syn:
        raise NotImplementedError

    def c_T(self, inh: inh, s: gt.Aug, p1: gt.Aug) -> syn:
        raise NotImplementedError
