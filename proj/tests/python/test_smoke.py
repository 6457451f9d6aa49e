import alonzo
import pytest

COMM = "forall x, y:M. x · y = y · x"


def test_bundled_graph_counts():
    s = alonzo.stats("monoid")
    assert (s["theories"], s["morphisms"], s["inclusions"]) == (12, 18, 9)
    assert s["open"] == 0


def test_transport_both_instances():
    plus = alonzo.transport("phi-mon-cof-plus", "id-elt-is-unique")
    star = alonzo.transport("phi-mon-cof-star", "id-elt-is-unique")
    assert plus.out == "forall x:R. (forall y:R. x + y = y + x = y) => x = 0\n"
    assert star.out == "forall x:R. (forall y:R. x * y = y * x = y) => x = 1\n"
    assert alonzo.transport("phi-mon-cof-plus", "no-such").exit_code == 1


def test_check_in_memory_sources():
    good = {"t.thy": "theory T\n  base U\n  const c : U\n  axiom a : c = c\nend\n"}
    assert alonzo.check(["t.thy"], sources=good).exit_code == 0
    bad = {"t.thy": "theory T\n  base U\n  axiom a : forall x:U. x = y\nend\n"}
    r = alonzo.check(["t.thy"], sources=bad)
    assert r.exit_code == 1
    assert "t.thy:3:" in r.err and "NotASentence" in r.err


def test_countermodel_and_model_checking():
    r = alonzo.countermodel(COMM, theory="MON")
    assert r.exit_code == 0
    assert alonzo.holds_in(r.out, "assoc")
    assert not alonzo.holds_in(r.out, COMM)
    assert alonzo.countermodel("id-elt-is-unique", theory="MON", max_size=3).out == "none up to size 3\n"
    assert alonzo.countermodel("Thm28", theory="COF").exit_code == 2


def test_bundled_models():
    z3 = alonzo.bundled_file("corpus/models/z3.model")
    assert alonzo.holds_in(z3, COMM)
    assert not alonzo.holds_in(alonzo.bundled_file("corpus/models/left-zero.model"), COMM)


def test_expressions():
    assert alonzo.type_of("fun f:R -> R. fun x:R. deriv-at(f, x)", "COF") == "(R -> R) -> R -> R"
    assert alonzo.compact("lim x -> 0 of x + 1", "COF") == "lim x -> 0 of x + 1"
    assert alonzo.latex("forall n:R. (sum i = 1 to n of i) = sum(1, n, fun i:R. i)", "COF").count("\\sum_{i=1}^{n} i") == 2
    with pytest.raises(ValueError, match="TypeMismatch"):
        alonzo.type_of("0 + (1 = 1)", "COF")


def test_render():
    text = alonzo.render("MON", latex=True).out
    assert text.startswith("\\begin{alonzotheory}{MON}\n")
    assert "MON" in alonzo.theories()
