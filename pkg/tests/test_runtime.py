import pytest
from hypothesis import given, strategies as st

from gen import terms
from gtrans.generated.lam_gen import App, Lam, Var, lam_gcata
from gtrans.generated.show_lam import show_lam
from gtrans.generated.t_gen import A, T, t_gcata
from gtrans.lam import show
from gtrans.runtime import (
    EMPTY_BUNDLE, ParamBundle, Trait, UnknownHandler, delegation_chain, extend, make_aug, transform,
)


def test_make_aug_fields():
    tp = ParamBundle(a=lambda i, v: v)
    f = lambda i, v: (i, v)
    aug = make_aug(Var("x"), f, tp)
    assert aug.x == Var("x")
    assert aug.f is f
    assert aug.tp is tp


def test_make_aug_constant():
    assert make_aug(5, lambda i, v: 0, EMPTY_BUNDLE).fx("anything") == 0


@given(terms(3), st.integers())
def test_make_aug_fx_is_partial_application(t, i):
    f = lambda inh, v: (inh, show(v))
    assert make_aug(t, f).fx(i) == f(i, t)


def test_param_bundle():
    tp = ParamBundle(a=min, b=max)
    assert tp.a is min and tp["b"] is max
    assert tp.names() == ("a", "b") and len(tp) == 2
    with pytest.raises(AttributeError):
        tp.c
    with pytest.raises(AttributeError):
        tp.a = max


def test_bundle_matches_declared_params():
    seen = []
    from gtrans.generated.show_t import show_t

    class TProbe(show_t):
        def c_A(self, inh, s, p1):
            seen.append(s.tp.names())
            return super().c_A(inh, s, p1)

    t_gcata(lambda i, v: str(v), lambda i, v: v, TProbe(), None, T(A(1)))
    assert seen == [("a", "b")]


# -- extension and late binding -----------------------------------------------

def bare_var(self, inh, s, x):
    return x


def test_extend_better_show():
    better = extend(show_lam(), {"c_Var": bare_var})
    assert transform(lam_gcata, better)(None, App(Var("x"), Var("y"))) == "App (x, y)"


def test_extend_class_and_instance():
    cls = extend(show_lam, {"c_Var": bare_var}, name="better")
    assert isinstance(cls, type) and cls.__name__ == "better"
    assert lam_gcata(cls(), None, Lam("x", Var("x"))) == "Lam (x, x)"


@given(terms(5))
def test_empty_extension_is_identity(t):
    assert lam_gcata(extend(show_lam(), {}), None, t) == show(t)


def test_last_writer_wins():
    h1 = lambda self, inh, s, p1: "h1"
    h2 = lambda self, inh, s, p1: "h2"
    from gtrans.generated.show_t import show_t
    t2 = extend(extend(show_t(), {"c_A": h1}), {"c_A": h2})
    assert t_gcata(str, str, t2, None, A(0)) == "h2"
    assert [own for _, own in delegation_chain(t2)][:2] == [("c_A",), ("c_A",)]


def test_unknown_handler():
    with pytest.raises(UnknownHandler):
        extend(show_lam(), {"c_Nope": bare_var})


def test_trait_label_in_chain():
    trait = Trait("bare_vars", {"c_Var": bare_var})
    chain = delegation_chain(extend(show_lam, trait))
    assert chain[0] == ("bare_vars", ("c_Var",))
    assert chain[1][0] == "show_lam"


def count_vars(t):
    match t:
        case Var(_):
            return 1
        case App(f, a):
            return count_vars(f) + count_vars(a)
        case Lam(_, b):
            return count_vars(b)


@given(terms(6))
def test_override_at_depth(t):
    # Every Var, at any depth, is reached through the overriding handler.
    out = lam_gcata(extend(show_lam(), {"c_Var": bare_var}), None, t)
    assert "Var (" not in out
    assert out.count("Var") == 0
    hits = []
    spy = extend(show_lam(), {"c_Var": lambda self, inh, s, x: hits.append(x) or x})
    lam_gcata(spy, None, t)
    assert len(hits) == count_vars(t)


@given(terms(4), st.integers())
def test_dispatch_exactness(t, inh):
    calls = []

    def record(name):
        def h(self, i, s, *args):
            calls.append((name, i))
            return name
        return h

    probe = extend(show_lam(), {n: record(n) for n in ("c_Var", "c_App", "c_Lam")})
    lam_gcata(probe, inh, t)
    expected = {Var: "c_Var", App: "c_App", Lam: "c_Lam"}[type(t)]
    assert calls == [(expected, inh)]


@given(terms(5))
def test_stateless(t):
    tr = show_lam()
    before = dict(vars(tr))
    assert lam_gcata(tr, None, t) == lam_gcata(tr, None, t)
    assert vars(tr) == before == {}
