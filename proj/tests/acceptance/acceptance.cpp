// Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alonzo/cli.hpp"
#include "alonzo/corpus.hpp"
#include "alonzo/model.hpp"
#include "fixtures.hpp"
#include "term_gen.hpp"

using namespace alonzo;
using namespace alonzo::testing;

namespace {

// Pinned limits.
constexpr double kCorpusSeconds = 1.0;
constexpr double kTransportSeconds = 1.0;
constexpr double kUndefinednessSeconds = 60.0;
constexpr double kModelCheckSeconds = 30.0;
constexpr int kRoundTrips = 1000;
constexpr int kFuzzTerms = 10000;
constexpr int kOracleSeeds = 10000;
constexpr std::size_t kOracleMaxDepth = 4;
constexpr int kOracleMaxCarrier = 3;
constexpr std::size_t kMonoidTheories = 12;
constexpr std::size_t kMonoidMorphisms = 18;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string stat_line(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  return {};
}

Outcome corpus_fidelity() {
  auto start = Clock::now();
  Inputs in;
  in.corpus = true;
  GraphStatsOptions opts;
  opts.graph = "monoid";
  CommandResult r = cmd_graph_stats(in, opts);
  double t = seconds_since(start);
  if (r.exit_code != kExitOk) return fail("graph-stats exited " + std::to_string(r.exit_code) + ": " + r.err);
  std::string theories = stat_line(r.out, "theories");
  std::string morphisms = stat_line(r.out, "morphisms");
  std::ostringstream d;
  d << "theories=" << theories << " morphisms=" << morphisms << " in " << t << "s";
  if (theories != std::to_string(kMonoidTheories) || morphisms != std::to_string(kMonoidMorphisms))
    return fail(d.str());
  const TheoryGraph g = load_corpus().monoid_graph();
  if (g.theories().size() != kMonoidTheories || g.morphisms().size() != kMonoidMorphisms)
    return fail("library graph disagrees: " + d.str());
  if (t >= kCorpusSeconds) return fail(d.str() + " (limit " + std::to_string(kCorpusSeconds) + "s)");
  return {true, d.str()};
}

Outcome transport_reproduction() {
  struct Case {
    std::string via, expected;
  };
  const std::vector<Case> cases = {
      {"phi-mon-cof-plus", "forall x:R. (forall y:R. x + y = y + x = y) => x = 0"},
      {"phi-mon-cof-star", "forall x:R. (forall y:R. x * y = y * x = y) => x = 1"},
  };
  auto start = Clock::now();
  const Corpus& corpus = load_corpus();
  const Theory& cof = corpus.graph().theory("COF");
  for (const auto& c : cases) {
    Inputs in;
    in.corpus = true;
    TransportOptions opts;
    opts.via = c.via;
    opts.item = "id-elt-is-unique";
    CommandResult r = cmd_transport(in, opts);
    if (r.exit_code != kExitOk) return fail(c.via + " exited " + std::to_string(r.exit_code) + ": " + r.err);
    if (r.out != c.expected + "\n") return fail(c.via + " printed '" + r.out + "'");
    const Morphism& m = corpus.graph().morphism(c.via);
    Expr stmt = transported_statement(m, corpus.graph().theory(m.source), cof, "id-elt-is-unique");
    Expr expected = parse_expr(c.expected, cof.vocabulary(), cof.notations());
    if (!alpha_equal(stmt, expected)) return fail(c.via + ": statement is not alpha-equal to the expected sentence");
  }
  double t = seconds_since(start);
  std::ostringstream d;
  d << "both instances byte-equal and alpha-equal in " << t << "s";
  if (t >= kTransportSeconds) return fail(d.str());
  return {true, d.str()};
}

Outcome calculus_typing() {
  const Theory& cof = load_corpus().graph().theory("COF");
  const Signature& sig = cof.vocabulary();
  struct Case {
    std::string def, constant, type;
  };
  const std::vector<Case> cases = {
      {"Def10", "lim", "(R -> R) -> R -> R"},
      {"Def13", "lim-seq", "(R -> R) -> R"},
      {"Def14", "cont-at", "(R -> R) -> R -> Bool"},
      {"Def18", "cont-on-closed-int", "(R -> R) -> R -> R -> Bool"},
      {"Def19", "deriv-at", "(R -> R) -> R -> R"},
      {"Def22", "deriv", "(R -> R) -> R -> R"},
      {"Def26", "integral", "(R -> R) -> R -> R -> R"},
  };
  for (const auto& c : cases) {
    const Definition* d = cof.find_definition(c.def);
    if (!d) return fail("missing " + c.def);
    if (d->constant != c.constant) return fail(c.def + " defines " + d->constant);
    Type expected = parse_type(c.type, sig);
    Type synthesized = type_of(d->body, sig);
    if (d->type != expected || synthesized != expected)
      return fail(c.def + " has type " + d->type.to_string() + ", expected " + expected.to_string());
  }
  if (sig.constant_type("sum") != parse_type("R -> R -> (R -> R) -> R", sig))
    return fail("sum has type " + sig.constant_type("sum").to_string());
  for (const char* thm : {"Thm27", "Thm28"}) {
    const Theorem* th = cof.find_theorem(thm);
    if (!th || !is_sentence(th->sentence, sig)) return fail(std::string(thm) + " is not a sentence");
  }
  return {true, std::to_string(cases.size()) + " definitions, sum, Thm27 and Thm28 type-check exactly"};
}

Outcome notation_laws() {
  const Theory& cof = load_corpus().graph().theory("COF");
  const Signature& sig = cof.vocabulary();
  const NotationSet& notations = cof.notations();
  Type r = Type::base("R");
  GenConfig cfg;
  cfg.max_depth = 5;
  cfg.binder_types = {r, r, Type::boolean(), Type::fun(r, r), Type::set_of(r), Type::prod(r, r)};
  cfg.side_types = {r, r, Type::fun(r, r), Type::set_of(r)};
  cfg.var_names = {"x", "y", "n", "i", "x1", "e"};
  cfg.lambda_bias = 0.7;
  cfg.guard_sets = {"N"};
  TermGen gen(sig, cfg, 20240501);
  std::vector<Type> targets = {Type::boolean(), Type::boolean(), r, Type::fun(r, r)};
  int sugared = 0;
  for (int i = 0; i < kRoundTrips; ++i) {
    Expr e = gen.term(targets[i % targets.size()]);
    std::string text = print_compact(e, notations);
    Expr back = e;
    try {
      back = parse_expr(text, sig, notations);
    } catch (const std::exception& err) {
      return fail("term " + std::to_string(i) + " '" + text + "' does not reparse: " + err.what());
    }
    if (!alpha_equal(back, e))
      return fail("term " + std::to_string(i) + " '" + text + "' reparses as '" + print_compact(back, notations) + "'");
    for (const char* s : {"sum ", "lim ", "lim-seq ", "integral "})
      if (text.find(s) != std::string::npos) {
        ++sugared;
        break;
      }
  }

  // The four sugars and the terms they stand for.
  struct Law {
    std::string sugar, meaning;
  };
  const std::vector<Law> laws = {
      {"sum i = 0 to 1 of i * i", "sum(0, 1, fun i:R. i * i)"},
      {"lim x -> 0 of x + 1", "lim(fun x:R. x + 1, 0)"},
      {"lim-seq n of n / (n + 1)", "lim-seq(fun n in N. n / (n + 1))"},
      {"integral from 0 to 1 of x * x dx", "integral(fun x:R. x * x, 0, 1)"},
  };
  for (const auto& law : laws) {
    Expr sugar = parse_expr(law.sugar, sig, notations);
    Expr meaning = parse_expr(law.meaning, sig, {});
    if (!alpha_equal(sugar, meaning)) return fail("'" + law.sugar + "' does not expand to '" + law.meaning + "'");
    if (print_compact(meaning, notations) != law.sugar)
      return fail("'" + law.meaning + "' prints as '" + print_compact(meaning, notations) + "'");
  }
  return {true, std::to_string(kRoundTrips) + " round trips (" + std::to_string(sugared) +
                    " with sugar), 4 sugar laws"};
}

Outcome undefinedness() {
  auto start = Clock::now();
  Signature sig = oracle_signature();
  int undefined_subterms = 0;
  for (int i = 0; i < kFuzzTerms; ++i) {
    std::mt19937_64 rng(1'000'000 + i);
    FiniteModel m = random_model(sig, rng, kOracleMaxCarrier);
    TermGen gen(sig, oracle_config(5), rng());
    Expr e = gen.sentence();
    Evaluator ev(m);
    Value v = ev.eval(e);
    if (v.kind() != Value::Kind::Truth)
      return fail("term " + std::to_string(i) + " '" + print_compact(e) + "' is not a truth value");
    Value d = ev.eval(Expr::is_defined(gen.term(Type::base("M"))));
    undefined_subterms += !d.truth_value();
  }
  // Iota with no witness and with several witnesses.
  Type m = Type::base("M");
  Expr none = Expr::iota("x", m, Expr::not_(Expr::eq(Expr::var("x", m), Expr::var("x", m))));
  Expr many = Expr::iota("x", m, Expr::eq(Expr::var("x", m), Expr::var("x", m)));
  FiniteModel three;
  three.name = "three";
  three.carriers["M"] = {"a", "b", "c"};
  Evaluator ev(three);
  if (!ev.eval(none).is_undef()) return fail("iota with no witness is defined");
  if (!ev.eval(many).is_undef()) return fail("iota with three witnesses is defined");
  if (ev.eval(Expr::eq(none, none)).truth_value()) return fail("an equation between undefined terms holds");
  double t = seconds_since(start);
  std::ostringstream d;
  d << kFuzzTerms << " Boolean terms total (" << undefined_subterms << " undefined M-terms seen), iota cases in "
    << t << "s";
  if (undefined_subterms == 0) return fail("fuzzing never produced an undefined term: " + d.str());
  if (t >= kUndefinednessSeconds) return fail(d.str());
  return {true, d.str()};
}

Outcome oracle_equivalence() {
  Signature sig = oracle_signature();
  Type m = Type::base("M");
  Type b = Type::boolean();
  const std::vector<Type> targets = {b, b, b, m, Type::fun(m, b), Type::fun(m, m), Type::set_of(m),
                                     Type::prod(m, m)};
  int undefined = 0;
  for (int seed = 0; seed < kOracleSeeds; ++seed) {
    std::mt19937_64 rng(seed);
    FiniteModel model = random_model(sig, rng, kOracleMaxCarrier);
    TermGen gen(sig, oracle_config(static_cast<int>(kOracleMaxDepth)), rng());
    const Type& target = targets[seed % targets.size()];
    Expr e = gen.term(target);
    while (e.depth() > kOracleMaxDepth) e = gen.term(target);
    Evaluator ev(model);
    OVal main = decode(ev.domains(), target, ev.eval(e));
    OVal expected = oracle_for(sig, model).eval(e);
    undefined += expected.undefined();
    if (!(main == expected))
      return fail("seed " + std::to_string(seed) + " '" + print_compact(e) + "': evaluator " + to_string(main) +
                  ", oracle " + to_string(expected));
  }
  return {true, std::to_string(kOracleSeeds) + " terms of depth <= " + std::to_string(kOracleMaxDepth) +
                    ", carriers <= " + std::to_string(kOracleMaxCarrier) + ", 0 disagreements (" +
                    std::to_string(undefined) + " undefined)"};
}

// Brute-force check of a sentence in a model with the oracle.
bool oracle_holds(const Theory& t, const FiniteModel& m, const Expr& s) {
  return oracle_for(t.base_signature(), m).eval(s) == OVal::boolean(true);
}

Outcome model_checking() {
  auto start = Clock::now();
  const Corpus& corpus = load_corpus();
  const Theory& mon = corpus.graph().theory("MON");
  auto text = corpus_reader()("corpus/models/z3.model");
  if (!text) return fail("z3.model is not bundled");
  FiniteModel z3 = parse_model(*text, mon, "corpus/models/z3.model");
  SentenceCheck c = check_sentence(mon, z3, "id-elt-is-unique");
  if (!c.value || !c.failed_axioms.empty()) return fail("Z3 does not satisfy MON and id-elt-is-unique");
  for (const auto& a : mon.axioms())
    if (!oracle_holds(mon, z3, a.sentence)) return fail("oracle: Z3 fails " + a.name);
  if (!oracle_holds(mon, z3, mon.find_theorem("id-elt-is-unique")->sentence))
    return fail("oracle: Z3 fails id-elt-is-unique");

  Expr comm = parse_expr("forall x, y:M. x · y = y · x", mon.vocabulary(), mon.notations());
  SearchOptions opts;
  opts.max_size = 3;
  auto cm = find_countermodel(mon, comm, opts);
  if (!cm) return fail("no countermodel to commutativity up to size 3");
  if (cm->carriers.at("M").size() != 3) return fail("commutativity countermodel has the wrong size");
  for (const auto& a : mon.axioms())
    if (!oracle_holds(mon, *cm, a.sentence)) return fail("oracle: countermodel fails " + a.name);
  if (oracle_holds(mon, *cm, comm)) return fail("oracle: countermodel is commutative");

  opts.max_size = 4;
  auto none = find_countermodel(mon, mon.find_theorem("id-elt-is-unique")->sentence, opts);
  if (none) return fail("found a countermodel to id-elt-is-unique");
  double t = seconds_since(start);
  std::ostringstream d;
  d << "Z3 satisfies MON and id-elt-is-unique; commutativity refuted at size 3; none for id-elt-is-unique up to 4; "
    << t << "s";
  if (t >= kModelCheckSeconds) return fail(d.str());
  return {true, d.str()};
}

Outcome functoriality() {
  const TheoryGraph& g = load_corpus().graph();
  int pairs = 0;
  long checks = 0;
  for (const auto& [id1, m1] : g.morphisms()) {
    for (const auto& [id2, m2] : g.morphisms()) {
      if (m1.target != m2.source) continue;
      ++pairs;
      const Theory& a = g.theory(m1.source);
      const Theory& b = g.theory(m1.target);
      const Theory& c = g.theory(m2.target);
      Morphism composed = compose(m1, m2, a, b, c);
      std::vector<std::pair<std::string, Expr>> sentences;
      for (const auto& ax : a.axioms()) sentences.emplace_back(ax.name, ax.sentence);
      for (const auto& th : a.theorems()) sentences.emplace_back(th.name, th.sentence);
      for (const auto& [name, s] : sentences) {
        Expr direct = translate_expr(composed, s, a, c);
        Expr stepwise = translate_expr(m2, translate_expr(m1, s, a, b), b, c);
        ++checks;
        if (!alpha_equal(direct, stepwise))
          return fail(id1 + ";" + id2 + " on " + name + ": " + print_compact(direct) + " vs " + print_compact(stepwise));
      }
    }
  }
  if (pairs == 0) return fail("no composable pairs");
  return {true, std::to_string(pairs) + " composable pairs, " + std::to_string(checks) + " sentences, 0 failures"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "corpus fidelity", corpus_fidelity},
      {2, "transport reproduction", transport_reproduction},
      {3, "calculus typing", calculus_typing},
      {4, "notation laws", notation_laws},
      {5, "undefinedness semantics", undefinedness},
      {6, "oracle equivalence", oracle_equivalence},
      {7, "model checking", model_checking},
      {8, "morphism functoriality", functoriality},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
