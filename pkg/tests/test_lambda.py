import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from gen import terms
from gtrans.generated.lam_gen import App, Lam, Var
from gtrans.lam import (
    STRATEGIES, STRATEGY_NAMES, TRACING_STRATEGIES, FuelExhausted, NameGen, TermSyntaxError,
    alpha_eq, better_show, free_vars, parse_term, reduce, reduce_with_trace, subst, term_vars,
)
from gtrans.lam.reduction import TRAITS, Reducer, TracingReducer, abst, appl, appr, default_context
from gtrans.lam.samples import SAMPLES
from gtrans.runtime import delegation_chain
from oracle import OutOfFuel, alpha_equal, one_step_reducts, reference_reduce, substitute

I = Lam("x", Var("x"))
OMEGA = App(Lam("x", App(Var("x"), Var("x"))), Lam("x", App(Var("x"), Var("x"))))


def test_name_gen():
    g = NameGen({"x", "x'"})
    assert g("x") == "x''"
    assert g("x") == "x'''"
    assert g("y") == "y'"
    assert g.produced == ["x''", "x'''", "y'"]


@given(st.lists(st.sampled_from(["x", "y", "x'"]), max_size=20))
def test_name_gen_never_collides(requests):
    taken = {"x", "y"}
    g = NameGen(taken)
    out = [g(r) for r in requests]
    assert len(set(out)) == len(out)
    assert not set(out) & taken


def test_subst_examples():
    g = NameGen({"x", "y"})
    assert subst(g, "x", Var("y"), Lam("y", App(Var("x"), Var("y")))) == Lam("y'", App(Var("y"), Var("y'")))
    assert subst(NameGen(), "x", Var("q"), Lam("x", Var("x"))) == Lam("x", Var("x"))
    assert subst(NameGen(), "x", Var("z"), Var("x")) == Var("z")


def test_subst_keeps_pending_renames_under_shadowing():
    # \y. \x. x y  with x := y: y is renamed, and the inner x-binder must still see the rename
    body = Lam("y", Lam("x", App(Var("x"), Var("y"))))
    out = subst(NameGen({"x", "y"}), "x", Var("y"), body)
    assert alpha_eq(out, Lam("a", Lam("b", App(Var("b"), Var("a")))))


@given(terms(5), st.sampled_from(["x", "y", "z"]), terms(3))
def test_subst_against_oracle(body, x, payload):
    g = NameGen(term_vars(body) | term_vars(payload) | _binders(body) | _binders(payload))
    assert alpha_equal(subst(g, x, payload, body), substitute(body, x, payload))


def _binders(t):
    match t:
        case Var(_):
            return set()
        case App(f, a):
            return _binders(f) | _binders(a)
        case Lam(x, b):
            return {x} | _binders(b)


def test_alpha_eq():
    assert alpha_eq(Lam("x", Var("x")), Lam("y", Var("y")))
    assert not alpha_eq(Lam("x", Var("z")), Lam("x", Var("w")))
    assert alpha_eq(Lam("y'", App(Var("y"), Var("y'"))), Lam("a", App(Var("y"), Var("a"))))


# -- reduction -----------------------------------------------------------------

@pytest.mark.parametrize("strategy, term, expected", [
    ("bn", Lam("x", App(I, Var("z"))), Lam("x", App(I, Var("z")))),
    ("nor", Lam("x", App(Lam("y", Var("y")), Var("z"))), Lam("x", Var("z"))),
    ("bv", App(Var("x"), App(I, Var("y"))), App(Var("x"), Var("y"))),
    ("bn", App(Var("x"), App(I, Var("y"))), App(Var("x"), App(I, Var("y")))),
    ("ha", App(Lam("x", App(Var("y"), Var("x"))), App(I, Var("y"))), App(Var("y"), Var("y"))),
])
def test_reduce_examples(strategy, term, expected):
    assert alpha_eq(reduce(strategy, term), expected)


@pytest.mark.parametrize("strategy", STRATEGY_NAMES)
@pytest.mark.parametrize("term", SAMPLES)
def test_samples_match_reference(strategy, term):
    assert alpha_eq(reduce(strategy, term), reference_reduce(strategy, term))


def test_unknown_strategy():
    with pytest.raises(ValueError, match="bn, nor, bv, ao, ha, he, hn"):
        reduce("xx", Var("x"))


@pytest.mark.parametrize("strategy", ["nor", "ao", "ha", "hn", "bn", "bv", "he"])
def test_omega_runs_out_of_fuel(strategy):
    with pytest.raises(FuelExhausted) as e:
        reduce(strategy, OMEGA, fuel=10)
    assert e.value.steps == 10


def test_fuel_counts_beta_steps_like_the_reference():
    t = App(App(Lam("a", Lam("b", Var("b"))), App(I, Var("p"))), App(I, Var("q")))
    assert reduce("ao", t, fuel=4) == reference_reduce("ao", t, fuel=4) == Var("q")
    with pytest.raises(FuelExhausted):
        reduce("ao", t, fuel=3)
    with pytest.raises(OutOfFuel):
        reference_reduce("ao", t, fuel=3)


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(terms(6), st.sampled_from(STRATEGY_NAMES))
def test_reduce_agrees_with_reference(t, strategy):
    try:
        expected = reference_reduce(strategy, t, fuel=60)
    except OutOfFuel:
        with pytest.raises(FuelExhausted):
            reduce(strategy, t, fuel=60)
        return
    result = reduce(strategy, t, fuel=60)
    assert alpha_eq(result, expected)
    assert free_vars(result) <= free_vars(t)


@settings(max_examples=100, deadline=None)
@given(terms(6), st.sampled_from(STRATEGY_NAMES))
def test_fresh_names_avoid_original_vars(t, strategy):
    ctx = default_context(t, fuel=60)
    try:
        STRATEGIES[strategy](ctx, t)
    except FuelExhausted:
        pass
    assert not set(ctx.gen.produced) & term_vars(t)


# -- tracing -------------------------------------------------------------------

def test_hole_combinators():
    assert appl(Var("m"))(Var("h")) == App(Var("h"), Var("m"))
    assert appr(Var("f"))(Var("h")) == App(Var("f"), Var("h"))
    assert abst("x")(Var("h")) == Lam("x", Var("h"))


def test_trace_examples():
    assert reduce_with_trace("bv", App(I, Var("y"))) == (Var("y"), [Var("y")])
    for s in STRATEGY_NAMES:
        assert reduce_with_trace(s, Lam("x", App(Var("x"), Var("y")))) == (Lam("x", App(Var("x"), Var("y"))), [])
    result, trace = reduce_with_trace("nor", App(Lam("x", App(Lam("y", Var("y")), Var("z"))), Var("w")))
    assert trace == [App(Lam("y", Var("y")), Var("z")), Var("z")] and result == Var("z")


def test_trace_context_under_binder_and_argument():
    _, trace = reduce_with_trace("nor", App(Var("f"), Lam("x", App(I, Var("x")))))
    assert trace == [App(Var("f"), Lam("x", Var("x")))]
    _, trace = reduce_with_trace("ao", App(Lam("x", Var("x")), App(I, Var("v"))))
    assert trace == [App(Lam("x", Var("x")), Var("v")), Var("v")]


def test_partial_trace_on_fuel():
    with pytest.raises(FuelExhausted) as e:
        reduce_with_trace("nor", OMEGA, fuel=3)
    assert e.value.trace == [OMEGA] * 3


def coherent(t, result, trace):
    prev = t
    for snap in trace:
        if not any(alpha_equal(snap, r) for r in one_step_reducts(prev)):
            return False
        prev = snap
    return alpha_eq(prev, result)


@settings(max_examples=100, deadline=None)
@given(terms(5), st.sampled_from(STRATEGY_NAMES))
def test_trace_coherence(t, strategy):
    try:
        result, trace = reduce_with_trace(strategy, t, fuel=25)
    except FuelExhausted:
        return
    assert coherent(t, result, trace)
    assert alpha_eq(result, reduce(strategy, t))


# -- construction of strategies -----------------------------------------------

BASE_LEVELS = {"Reducer", "TracingReducer", "lam_t", "Transformer", "Generic"}
HEAD_OVERRIDES = {"normal", "hybrid_applicative", "hybrid_normal"}


@pytest.mark.parametrize("table", [STRATEGIES, TRACING_STRATEGIES], ids=["simple", "tracing"])
def test_strategies_are_pure_trait_composition(table):
    for name, strategy in table.items():
        for label, own in delegation_chain(strategy.transformer):
            if label in TRAITS:
                assert set(own) == set(TRAITS[label].handlers), (name, label)
            elif label in BASE_LEVELS:
                continue
            else:
                # a named strategy level: nothing, or only the hybrid head override
                assert set(own) <= ({"head"} if label in HEAD_OVERRIDES else set()), (name, label, own)


def test_strategies_share_base():
    for s in STRATEGIES.values():
        assert isinstance(s.transformer, Reducer)
    for s in TRACING_STRATEGIES.values():
        assert isinstance(s.transformer, TracingReducer)


def test_strategy_trait_sets():
    def traits(s):
        return [label for label, _ in delegation_chain(STRATEGIES[s].transformer) if label in TRAITS]
    assert traits("bn") == ["non_strict", "dont_reduce_arguments", "dont_reduce_under_abstractions"]
    assert traits("ao") == ["reduce_under_abstractions", "strict", "reduce_arguments",
                            "dont_reduce_under_abstractions"]


# -- syntax ---------------------------------------------------------------------

def test_parse_term():
    assert parse_term(r"(\x. x) y") == App(I, Var("y"))
    assert parse_term(r"a b c") == App(App(Var("a"), Var("b")), Var("c"))
    assert parse_term(r"f \x. x y") == App(Var("f"), Lam("x", App(Var("x"), Var("y"))))
    assert parse_term("λx'. x'") == Lam("x'", Var("x'"))


@pytest.mark.parametrize("bad", ["", r"\x x", "(a", "a)", "#"])
def test_parse_term_errors(bad):
    with pytest.raises(TermSyntaxError):
        parse_term(bad)


def test_better_show():
    assert better_show(App(Lam("x", Var("x")), Var("y"))) == "App (Lam (x, x), y)"
