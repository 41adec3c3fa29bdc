"""Lambda calculus on top of the generated ``lam`` traversal."""
from .reduction import (
    DEFAULT_FUEL, STRATEGIES, STRATEGY_NAMES, STRATEGY_TITLES, TRACING_STRATEGIES, FuelExhausted,
    Strategy, reduce, reduce_with_trace,
)
from .subst import NameGen, Substitutor, subst
from .terms import (
    App, Lam, Term, TermSyntaxError, Var, alpha_eq, better_show, binders, free_vars, parse_term,
    read_shown, show, term_vars,
)

__all__ = [
    "App", "Lam", "Term", "Var", "TermSyntaxError", "alpha_eq", "better_show", "binders",
    "free_vars", "parse_term", "read_shown", "show", "term_vars",
    "NameGen", "Substitutor", "subst",
    "DEFAULT_FUEL", "STRATEGIES", "STRATEGY_NAMES", "STRATEGY_TITLES", "TRACING_STRATEGIES",
    "FuelExhausted", "Strategy", "reduce", "reduce_with_trace",
]
