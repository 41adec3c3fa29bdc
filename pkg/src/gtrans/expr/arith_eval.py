"""Evaluator for the ``arith`` fragment; children are evaluated by the parameter function."""
from ..generated.arith_gen import arith_t


class arith_eval(arith_t):
    def c_Add(self, env, s, l, r):
        return l.fx(env) + r.fx(env)

    def c_Mul(self, env, s, l, r):
        return l.fx(env) * r.fx(env)
