import io
import json
import subprocess
import sys

from hypothesis import given, settings, strategies as st

from gen import NAMES, exprs, terms
from gtrans.cli import main
from gtrans.expr import evaluate
from gtrans.generated.lam_gen import App, Lam, Var
from gtrans.lam import STRATEGY_NAMES, FuelExhausted, reduce, show

LAM = "type lam = Var of string | App of lam * lam | Lam of string * lam\n"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_gen(tmp_path):
    src = tmp_path / "lam.gt"
    src.write_text(LAM)
    code, out, _ = run("gen", str(src), "--with", "show,foldl", "-o", str(tmp_path / "gen"))
    assert code == 0
    files = sorted(p.name for p in (tmp_path / "gen").iterdir())
    assert files == ["foldl_lam.py", "lam_gen.py", "manifest.json", "show_lam.py"]
    assert json.loads((tmp_path / "gen" / "manifest.json").read_text()) == [
        {"decl": "lam", "files": ["lam_gen.py", "show_lam.py", "foldl_lam.py"], "plugins": ["show", "foldl"]}]


def test_gen_empty(tmp_path):
    (tmp_path / "empty.gt").write_text("(* nothing *)\n")
    code, _, _ = run("gen", str(tmp_path / "empty.gt"), "-o", str(tmp_path / "o"))
    assert code == 0
    assert json.loads((tmp_path / "o" / "manifest.json").read_text()) == []


def test_gen_bad(tmp_path):
    (tmp_path / "bad.gt").write_text("type t =\n  A of | B\n")
    code, _, err = run("gen", str(tmp_path / "bad.gt"), "-o", str(tmp_path / "o"))
    assert code == 1
    assert "line 2, column 8" in err


def test_gen_io_errors(tmp_path):
    assert run("gen", str(tmp_path / "missing.gt"))[0] == 2
    (tmp_path / "lam.gt").write_text(LAM)
    (tmp_path / "blocker").write_text("")
    assert run("gen", str(tmp_path / "lam.gt"), "-o", str(tmp_path / "blocker"))[0] == 2


def test_gen_unknown_plugin(tmp_path):
    (tmp_path / "lam.gt").write_text(LAM)
    code, _, err = run("gen", str(tmp_path / "lam.gt"), "--with", "xml")
    assert code == 1 and "xml" in err


def test_reduce():
    assert run("reduce", r"(\x. x) y", "--strategy", "bv") == (0, "Var (y)\n", "")
    assert run("reduce", "x", "--strategy", "nor")[:2] == (0, "Var (x)\n")


def test_reduce_trace():
    code, out, _ = run("reduce", r"(\x. (\y. y) z) w", "--strategy", "nor", "--trace")
    assert code == 0
    assert out.splitlines() == ["App (Lam (y, Var (y)), Var (z))", "Var (z)", "Var (z)"]


def test_reduce_out_of_fuel():
    code, out, err = run("reduce", r"(\x. x x) (\x. x x)", "--strategy", "nor", "--fuel", "10", "--trace")
    assert code == 3
    assert len(out.splitlines()) == 10
    assert "fuel" in err


def test_gt_fuel_env(monkeypatch):
    monkeypatch.setenv("GT_FUEL", "5")
    code, _, err = run("reduce", r"(\x. x x) (\x. x x)")
    assert code == 3 and "after 5 " in err
    # an explicit flag beats the environment
    assert "after 7 " in run("reduce", r"(\x. x x) (\x. x x)", "--fuel", "7")[2]


def test_reduce_user_errors():
    code, _, err = run("reduce", "x", "--strategy", "fast")
    assert code == 1
    for name in STRATEGY_NAMES:
        assert name in err
    assert run("reduce", r"\x x")[0] == 1


def test_show():
    assert run("show", r"\x. x") == (0, "Lam (x, Var (x))\n", "")
    assert run("show", "(")[0] == 1


def test_eval():
    assert run("eval", "x + y*y", "-b", "x=2", "-b", "y=3") == (0, "11\n", "")
    code, _, err = run("eval", "z")
    assert code == 1 and err == "unbound variable z\n"
    assert run("eval", "x", "-b", "x")[0] == 1
    assert run("eval", "2 * (3 + 4)")[1] == "14\n"


def test_usage_errors():
    assert run()[0] == 1
    assert run("show", "x", "--nope")[0] == 1
    assert run("frobnicate")[0] == 1


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "gtrans", "show", r"\x. x"],
                       capture_output=True, text=True, encoding="utf-8")
    assert p.returncode == 0 and p.stdout == "Lam (x, Var (x))\n"


def concrete(t):
    match t:
        case Var(x):
            return x
        case App(f, a):
            return f"({concrete(f)} {concrete(a)})"
        case Lam(x, b):
            return f"(\\{x}. {concrete(b)})"


@settings(max_examples=60, deadline=None)
@given(terms(5), st.sampled_from(STRATEGY_NAMES))
def test_reduce_is_thin_wrapper(t, strategy):
    code, out, _ = run("reduce", concrete(t), "--strategy", strategy, "--fuel", "40")
    try:
        expected = show(reduce(strategy, t, fuel=40))
    except FuelExhausted:
        assert code == 3
        return
    assert (code, out) == (0, expected + "\n")


@settings(max_examples=60, deadline=None)
@given(exprs(5), st.lists(st.integers(-99, 99), min_size=4, max_size=4))
def test_eval_is_thin_wrapper(e, values):
    def emit(v):
        if v.tag == "Var":
            return v.args[0]
        return "(" + emit(v.args[0]) + (" + " if v.tag == "Add" else " * ") + emit(v.args[1]) + ")"
    env = dict(zip(NAMES, values))
    binds = [a for n, v in env.items() for a in ("-b", f"{n}={v}")]
    assert run("eval", emit(e), *binds) == (0, f"{evaluate(e, env)}\n", "")
