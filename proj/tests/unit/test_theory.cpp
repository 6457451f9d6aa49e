#include "alonzo/theory.hpp"
#include "helpers.hpp"

using namespace alonzo;
using namespace alonzo::testing;

namespace {

const Type M = Type::base("M");
const Type R = Type::base("R");
const Type RR = Type::fun(R, R);

Theory bare_mon() {
  return Theory("MON").add_base_type("M").add_constant("·", Type::fun(M, Type::fun(M, M))).add_constant("e", M);
}

Expr parse_in(const Theory& t, const std::string& text) { return parse_expr(text, t.vocabulary(), t.notations()); }

// COF's primitive language and notations, without its development.
Theory cof_language() {
  const Theory& cof = corpus_theory("COF");
  Theory t("COF-lang");
  for (const auto& b : cof.base_signature().base_types()) t = t.add_base_type(b);
  for (const auto& [c, ty] : cof.base_signature().constants()) t = t.add_constant(c, ty);
  return t;
}

}  // namespace

TEST_SUITE("theory") {
  TEST_CASE("add_axiom") {
    Theory mon = bare_mon();
    Theory one = mon.add_axiom("assoc", parse_in(mon, "forall x, y, z:M. (x · y) · z = x · (y · z)"));
    CHECK(one.axioms().size() == 1);
    CHECK(mon.axioms().empty());
    CHECK(error_code([&] { one.add_axiom("open", Expr::eq(Expr::var("x", M), one.vocabulary().constant("e"))); }) ==
          ErrorCode::NotASentence);
    CHECK(error_code([&] { one.add_axiom("assoc", parse_in(one, "e = e")); }) == ErrorCode::DuplicateName);
    CHECK(error_code([&] { one.add_axiom("not-bool", one.vocabulary().constant("e")); }) == ErrorCode::NotASentence);
  }

  TEST_CASE("add_definition on calculus examples") {
    Theory t = cof_language();
    t = t.add_definition("Def10", "lim", corpus_theory("COF").find_definition("Def10")->body);
    for (const auto& n : corpus_theory("COF").notations().defs())
      if (n.target == "sum" || n.target == "lim") t = t.add_notation(n);
    t = t.add_definition("Def14", "cont-at", parse_in(t, "fun f:R -> R. fun a:R. (lim x -> a of f(x)) = f(a)"));
    CHECK(t.vocabulary().constant_type("cont-at") == Type::fun(RR, Type::fun(R, Type::boolean())));
    t = t.add_definition("Def19", "deriv-at",
                         parse_in(t, "fun f:R -> R. fun a:R. lim h -> 0 of (f(a + h) - f(a)) / h"));
    CHECK(t.vocabulary().constant_type("deriv-at") == Type::fun(RR, RR));
    t = t.add_definition("Def22", "deriv", parse_in(t, "fun f:R -> R. fun x:R. deriv-at(f, x)"));
    CHECK(t.vocabulary().constant_type("deriv") == Type::fun(RR, RR));
    CHECK(error_code([&] { t.add_definition("plus", "+", parse_in(t, "fun x:R. x")); }) ==
          ErrorCode::ConstantExists);
    CHECK(error_code([&] { t.add_definition("open", "k", Expr::var("x", R)); }) == ErrorCode::NotClosed);
    CHECK(Theory::defining_axiom(*t.find_definition("Def22")) ==
          Expr::eq(t.vocabulary().constant("deriv"), t.find_definition("Def22")->body));
    // Definitions do not enter the base signature.
    CHECK_FALSE(t.base_signature().has_constant("deriv"));
  }

  TEST_CASE("add_theorem records the proof without checking it") {
    Theory mon = corpus_theory("MON");
    const Theorem* th = mon.find_theorem("id-elt-is-unique");
    REQUIRE(th);
    CHECK(std::holds_alternative<Traditional>(th->proof));
    CHECK(proof_status_name(th->proof) == "traditional");
    const Theory& cof = corpus_theory("COF");
    CHECK(std::holds_alternative<Traditional>(cof.find_theorem("Thm28")->proof));
    // A false statement is still recorded; nothing is checked.
    Theory t = mon.add_theorem("bogus", parse_in(mon, "forall x:M. x = e"), Assumed{});
    CHECK(t.find_theorem("bogus"));
    CHECK(error_code([&] { mon.add_theorem("free", Expr::eq(Expr::var("x", M), Expr::var("x", M)), Assumed{}); }) ==
          ErrorCode::NotASentence);
    CHECK(error_code([&] { mon.add_theorem("assoc", parse_in(mon, "e = e"), Assumed{}); }) ==
          ErrorCode::DuplicateName);
  }

  TEST_CASE("vocabulary") {
    Signature expected;
    expected.add_base_type("M");
    expected.add_constant("·", Type::fun(M, Type::fun(M, M)));
    expected.add_constant("e", M);
    CHECK(bare_mon().vocabulary() == expected);
    CHECK(corpus_theory("MON").base_signature() == expected);
    CHECK(corpus_theory("COF").vocabulary().constant_type("deriv") == Type::fun(RR, RR));
    CHECK(Theory("empty").vocabulary().empty());
  }

  TEST_CASE("replaying definitions reproduces the vocabulary") {
    for (const auto& [name, t] : load_corpus().graph().theories()) {
      CAPTURE(name);
      CHECK(replay_vocabulary(t) == t.vocabulary());
    }
  }

  TEST_CASE("stored sentences type-check at their insertion point") {
    for (const auto& [name, t] : load_corpus().graph().theories()) {
      Signature sig = t.base_signature();
      for (const auto& ref : t.items()) {
        CAPTURE(ref.name);
        switch (ref.kind) {
          case ItemKind::Axiom: CHECK(is_sentence(t.find_axiom(ref.name)->sentence, sig)); break;
          case ItemKind::Theorem: CHECK(is_sentence(t.find_theorem(ref.name)->sentence, sig)); break;
          case ItemKind::Definition: {
            const Definition& d = *t.find_definition(ref.name);
            CHECK(free_vars(d.body).empty());
            CHECK(type_of(d.body, sig) == d.type);
            sig.add_constant(d.constant, d.type);
          }
        }
      }
    }
  }

  TEST_CASE("builders never change earlier values") {
    Theory a = bare_mon();
    Theory b = a.add_axiom("left-id", parse_in(a, "forall x:M. e · x = x"));
    Theory c = b.add_definition("def-sq", "sq", parse_in(b, "fun x:M. x · x"));
    Theory d = c.add_theorem("sq-e", parse_in(c, "sq(e) = e"), Traditional{"by left-id"});
    CHECK(a.items().empty());
    CHECK(b.items().size() == 1);
    CHECK(c.items().size() == 2);
    CHECK(d.items().size() == 3);
    CHECK_FALSE(b.vocabulary().has_constant("sq"));
    CHECK(d.items()[2].kind == ItemKind::Theorem);
  }

  TEST_CASE("extends inherits language, axioms and definitions but not theorems") {
    const Theory& com = corpus_theory("COM-MON");
    CHECK(com.find_axiom("assoc"));
    CHECK(com.find_axiom("comm"));
    CHECK(com.find_definition("def-inv"));
    CHECK_FALSE(com.find_theorem("id-elt-is-unique"));
    CHECK(com.find_theorem("sq-mult"));
    CHECK(com.axioms().size() == 4);
  }

  TEST_CASE("iota definitions are accepted and the calculus constants are declared") {
    const Theory& cof = corpus_theory("COF");
    CHECK(cof.find_definition("Def10")->body.body().body().kind() == Expr::Kind::Iota);
    CHECK(cof.infinite_only());
    for (const char* c : {"right-cont-at", "left-cont-at", "right-deriv-at", "left-deriv-at"}) {
      CHECK(cof.base_signature().has_constant(c));
      CHECK_FALSE(cof.definition_of(c));
    }
  }
}
