"""Evaluator for the ``var`` fragment, polymorphic in the result type."""
from ..generated.var_gen import var_t


class var_eval(var_t):
    def c_Var(self, env, s, x):
        return env(x)
