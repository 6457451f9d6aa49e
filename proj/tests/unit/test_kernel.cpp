#include <random>

#include "alonzo/kernel.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "term_gen.hpp"

using namespace alonzo;
using namespace alonzo::testing;

namespace {

const Type M = Type::base("M");
const Type R = Type::base("R");
const Type B = Type::boolean();

Signature mon_signature() {
  Signature sig;
  sig.add_base_type("M");
  sig.add_constant("·", Type::fun(M, Type::fun(M, M)));
  sig.add_constant("e", M);
  return sig;
}

Expr op(const Expr& a, const Expr& b) { return Expr::app(Expr::constant("·", Type::fun(M, Type::fun(M, M))), {a, b}); }
Expr x_m() { return Expr::var("x", M); }
Expr y_m() { return Expr::var("y", M); }
Expr e_m() { return Expr::constant("e", M); }

// forall x:M. (forall y:M. x·y = y·x = y) => x = e
Expr id_elt_is_unique() {
  Expr chain = Expr::and_(Expr::eq(op(x_m(), y_m()), op(y_m(), x_m())), Expr::eq(op(y_m(), x_m()), y_m()));
  return Expr::forall("x", M, Expr::implies(Expr::forall("y", M, chain), Expr::eq(x_m(), e_m())));
}

// Renames every binder to a name not used anywhere in `e`.
Expr rename_bound(const Expr& e, int& counter) {
  std::vector<Expr> kids;
  for (const auto& c : e.children()) kids.push_back(rename_bound(c, counter));
  switch (e.kind()) {
    case Expr::Kind::Abs:
    case Expr::Kind::Iota:
    case Expr::Kind::Forall:
    case Expr::Kind::Exists:
    case Expr::Kind::GuardedAbs: {
      std::string fresh = "w" + std::to_string(++counter) + "z";
      Expr& body = kids.back();
      body = substitute(body, e.bound_var(), Expr::var(fresh, e.decl_type()));
      return e.with_binder(fresh, e.decl_type(), std::move(kids));
    }
    default:
      return e.arity() == 0 ? e : e.with_children(std::move(kids));
  }
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("type_of on the documented examples") {
    Signature r;
    r.add_base_type("R");
    r.add_constant("+", Type::fun(R, Type::fun(R, R)));
    r.add_constant("0", R);
    CHECK(type_of(Expr::abs("x", R, Expr::var("x", R)), r) == Type::fun(R, R));
    CHECK(type_of(Expr::app(r.constant("+"), r.constant("0")), r) == Type::fun(R, R));
    CHECK(type_of(id_elt_is_unique(), mon_signature()) == B);
  }

  TEST_CASE("type_of rejects ill-formed terms") {
    Signature sig = mon_signature();
    CHECK(error_code([&] { type_of(Expr::constant("k", M), sig); }) == ErrorCode::UnknownConstant);
    CHECK(error_code([&] { type_of(Expr::var("x", Type::base("Q")), sig); }) == ErrorCode::UnknownBaseType);
    CHECK(error_code([&] { type_of(Expr::app(e_m(), e_m()), sig); }) == ErrorCode::TypeMismatch);
    CHECK(error_code([&] { type_of(Expr::eq(e_m(), Expr::var("p", B)), sig); }) == ErrorCode::TypeMismatch);
    CHECK(error_code([&] { type_of(Expr::forall("x", M, x_m()), sig); }) == ErrorCode::NonBooleanBinderBody);
    CHECK(error_code([&] { type_of(Expr::iota("x", M, x_m()), sig); }) == ErrorCode::NonBooleanBinderBody);
    Expr guard = Expr::set_lit(B, {});
    CHECK(error_code([&] { type_of(Expr::guarded_abs("x", M, guard, x_m()), sig); }) == ErrorCode::TypeMismatch);
  }

  TEST_CASE("Boolean forms type as Bool and structured forms as their parts") {
    Signature sig = mon_signature();
    Expr s = Expr::set_lit(M, {e_m(), x_m()});
    CHECK(type_of(Expr::member(e_m(), s), sig) == B);
    CHECK(type_of(Expr::is_defined(e_m()), sig) == B);
    CHECK(type_of(Expr::iff(Expr::eq(e_m(), e_m()), Expr::is_defined(x_m())), sig) == B);
    CHECK(type_of(Expr::iota("x", M, Expr::eq(x_m(), e_m())), sig) == M);
    CHECK(type_of(Expr::pair(e_m(), Expr::eq(e_m(), e_m())), sig) == Type::prod(M, B));
    CHECK(type_of(Expr::proj2(Expr::pair(e_m(), x_m())), sig) == M);
    CHECK(type_of(s, sig) == Type::set_of(M));
    CHECK(type_of(Expr::guarded_abs("x", M, s, op(x_m(), x_m())), sig) == Type::fun(M, M));
  }

  TEST_CASE("substitute on the documented examples") {
    CHECK(substitute(y_m(), Variable{"y", M}, e_m()) == e_m());
    Expr a = Expr::abs("x", M, op(x_m(), y_m()));
    Expr renamed = substitute(a, Variable{"y", M}, x_m());
    // The binder becomes x1, the first fresh name.
    CHECK(renamed == Expr::abs("x1", M, op(Expr::var("x1", M), x_m())));
    Expr bound = Expr::forall("y", M, Expr::eq(y_m(), y_m()));
    CHECK(substitute(bound, Variable{"y", M}, e_m()) == bound);
  }

  TEST_CASE("variables are identified by name and type") {
    Expr mixed = Expr::and_(Expr::eq(x_m(), x_m()), Expr::var("x", B));
    Expr s = substitute(mixed, Variable{"x", B}, Expr::eq(e_m(), e_m()));
    CHECK(s == Expr::and_(Expr::eq(x_m(), x_m()), Expr::eq(e_m(), e_m())));
    CHECK(free_vars(mixed) == std::set<Variable>{{"x", M}, {"x", B}});
  }

  TEST_CASE("fresh names take the smallest free suffix") {
    CHECK(fresh_name("x", {"x"}) == "x1");
    CHECK(fresh_name("x", {"x", "x1", "x2"}) == "x3");
    CHECK(fresh_name("x1", {"x", "x1"}) == "x2");
    CHECK(fresh_name("y", {"x"}) == "y1");
  }

  TEST_CASE("alpha_equal on the documented examples") {
    CHECK(alpha_equal(Expr::abs("x", R, Expr::var("x", R)), Expr::abs("y", R, Expr::var("y", R))));
    CHECK_FALSE(alpha_equal(Expr::abs("x", R, Expr::var("x", R)), Expr::abs("x", M, x_m())));
    CHECK(alpha_equal(Expr::forall("x", M, Expr::eq(x_m(), e_m())),
                      Expr::forall("z", M, Expr::eq(Expr::var("z", M), e_m()))));
    // A bound variable is not a free one of the same name.
    CHECK_FALSE(alpha_equal(Expr::abs("x", M, y_m()), Expr::abs("y", M, y_m())));
    CHECK(canonical_key(Expr::abs("x", M, x_m())) == canonical_key(Expr::abs("y", M, y_m())));
  }

  TEST_CASE("free_vars on the documented examples") {
    CHECK(free_vars(Expr::abs("x", M, op(x_m(), y_m()))) == std::set<Variable>{{"y", M}});
    CHECK(free_vars(id_elt_is_unique()).empty());
    CHECK(is_sentence(id_elt_is_unique(), mon_signature()));
    CHECK(free_vars(x_m()) == std::set<Variable>{{"x", M}});
    CHECK_FALSE(is_sentence(Expr::eq(x_m(), e_m()), mon_signature()));
  }

  TEST_CASE("substitution preserves types, respects alpha-equivalence and is deterministic") {
    Signature sig = oracle_signature();
    // Values that always denote, so beta-conversion is sound for them.
    const std::vector<Expr> values = {Expr::var("y", M), sig.constant("e"),
                                      Expr::proj1(Expr::pair(Expr::var("y", M), sig.constant("e")))};
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      TermGen gen(sig, oracle_config(4), seed);
      Expr e = gen.term(B, {{"x", M}});
      const Expr& v = values[seed % values.size()];
      Variable x{"x", M};
      Expr s = substitute(e, x, v);
      REQUIRE(type_of(s, sig) == type_of(e, sig));
      CHECK(substitute(e, x, v) == s);

      int counter = 0;
      Expr renamed = rename_bound(e, counter);
      CHECK(alpha_equal(renamed, e));
      CHECK(alpha_equal(e, renamed));
      CHECK(alpha_equal(substitute(renamed, x, v), s));

      // Semantics: (fun y. (fun x. e)(v)) denotes what (fun y. e[x:=v]) does.
      std::mt19937_64 rng(seed);
      FiniteModel m = random_model(sig, rng, 3);
      Oracle oracle = oracle_for(sig, m);
      Expr beta = Expr::abs("y", M, Expr::app(Expr::abs("x", M, e), v));
      Expr substituted = Expr::abs("y", M, s);
      CHECK_MESSAGE(oracle.eval(beta) == oracle.eval(substituted), print_compact(e));
    }
  }

  TEST_CASE("alpha_equal is an equivalence relation on generated terms") {
    Signature sig = oracle_signature();
    TermGen gen(sig, oracle_config(4), 7);
    std::vector<Expr> terms;
    for (int i = 0; i < 60; ++i) terms.push_back(gen.sentence());
    int counter = 0;
    for (const auto& a : terms) {
      CHECK(alpha_equal(a, a));
      Expr b = rename_bound(a, counter);
      Expr c = rename_bound(b, counter);
      CHECK(alpha_equal(a, c));
      for (const auto& other : terms) CHECK(alpha_equal(a, other) == alpha_equal(other, a));
    }
  }

  TEST_CASE("type_of is deterministic") {
    Signature sig = oracle_signature();
    TermGen gen(sig, oracle_config(5), 11);
    for (int i = 0; i < 200; ++i) {
      Expr e = gen.term(Type::fun(M, B));
      CHECK(type_of(e, sig) == Type::fun(M, B));
      CHECK(type_of(e, sig) == type_of(e, sig));
    }
  }

  TEST_CASE("types compare structurally and print parseably") {
    Type t = Type::fun(Type::fun(R, R), Type::fun(R, R));
    CHECK(t == Type::curried(std::vector<Type>{Type::fun(R, R), R}, R));
    CHECK(t.to_string() == "(R -> R) -> R -> R");
    CHECK(Type::prod(M, Type::set_of(M)).to_string() == "M * {M}");
    CHECK(Type::fun(R, R) != Type::fun(R, M));
  }
}
