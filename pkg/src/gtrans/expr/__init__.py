"""The expression problem: two independently written fragments composed into one evaluator."""
from .arith_eval import arith_eval
from .expr_eval import Env, UnboundVariable, env_of, eval_, evaluate, expr_eval
from .syntax import ExprSyntaxError, literal_bindings, parse_expr
from .var_eval import var_eval

__all__ = ["var_eval", "arith_eval", "expr_eval", "Env", "UnboundVariable", "env_of", "eval_",
           "evaluate", "ExprSyntaxError", "literal_bindings", "parse_expr"]
