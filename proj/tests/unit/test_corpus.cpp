#include <regex>
#include <sstream>

#include "helpers.hpp"

using namespace alonzo;
using namespace alonzo::testing;

namespace {

const Type R = Type::base("R");
const Type RR = Type::fun(R, R);
const Type B = Type::boolean();

std::string bundled_text(const std::string& path) { return *corpus_reader()(path); }

// Lines of the form `  <keyword> <name>` at block-body indentation.
std::size_t count_keyword(const std::string& text, const std::string& keyword) {
  std::istringstream in(text);
  std::regex re("^  " + keyword + " \\S+");
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += std::regex_search(line, re);
  return n;
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("the bundled files load cleanly") {
    const Corpus& c = load_corpus();
    CHECK(c.workspace.ok());
    CHECK(c.workspace.open_obligation_diagnostics().empty());
    CHECK(c.notations.size() == 4);
    CHECK(c.workspace.find_graph("monoid"));
    CHECK(c.graph().theories().size() == 12);
    CHECK(c.graph().morphisms().size() == 20);
  }

  TEST_CASE("recorded stats match a recount") {
    const Corpus& c = load_corpus();
    for (const auto& e : corpus_entries()) {
      CAPTURE(e.path);
      CHECK(corpus_stats(c.workspace, e.path) == e.expected);
    }
  }

  TEST_CASE("stats of flat files match a textual count") {
    // COF has no parent and the transport file declares only morphisms, so
    // their stats can be read straight off the text.
    std::string cof = bundled_text("corpus/cof.thy");
    CorpusStats counted{count_keyword(cof, "axiom"), count_keyword(cof, "define"), count_keyword(cof, "theorem"), 0};
    CHECK(corpus_stats(load_corpus().workspace, "corpus/cof.thy") == counted);
    std::string transport = bundled_text("corpus/transport.thy");
    CHECK(count_keyword(transport, "map const") == 4);
    // Three monoid axioms per morphism.
    CHECK(corpus_stats(load_corpus().workspace, "corpus/transport.thy").obligations == 6);
  }

  TEST_CASE("the calculus definitions have their expected types") {
    const Theory& cof = corpus_theory("COF");
    const std::vector<std::pair<std::string, Type>> expected = {
        {"Def10", Type::fun(RR, RR)},
        {"Def13", Type::fun(RR, R)},
        {"Def14", Type::fun(RR, Type::fun(R, B))},
        {"Def18", Type::fun(RR, Type::fun(R, Type::fun(R, B)))},
        {"Def19", Type::fun(RR, RR)},
        {"Def22", Type::fun(RR, RR)},
        {"Def26", Type::fun(RR, Type::fun(R, RR))},
    };
    for (const auto& [name, type] : expected) {
      CAPTURE(name);
      const Definition* d = cof.find_definition(name);
      REQUIRE(d);
      CHECK(d->type == type);
      CHECK(type_of(d->body, cof.vocabulary()) == type);
    }
    CHECK(cof.vocabulary().constant_type("sum") == Type::fun(R, Type::fun(R, Type::fun(RR, R))));
    for (const char* th : {"Thm27", "Thm28"}) CHECK(is_sentence(cof.find_theorem(th)->sentence, cof.vocabulary()));
  }

  TEST_CASE("every notation is registered against its target") {
    const NotationSet& n = corpus_theory("COF").notations();
    for (const char* s : {"sum", "lim", "lim-seq", "integral"}) {
      CAPTURE(s);
      REQUIRE(n.find(s));
      CHECK(corpus_theory("COF").vocabulary().has_constant(n.find(s)->target));
    }
  }

  TEST_CASE("every stored statement survives a print and parse") {
    for (const auto& [name, t] : load_corpus().graph().theories()) {
      auto back = [&](const Expr& e) { return parse_expr(print_compact(e, t.notations()), t.vocabulary(), t.notations()); };
      for (const auto& a : t.axioms()) CHECK_MESSAGE(alpha_equal(back(a.sentence), a.sentence), (name + "/" + a.name));
      for (const auto& th : t.theorems())
        CHECK_MESSAGE(alpha_equal(back(th.sentence), th.sentence), (name + "/" + th.name));
      for (const auto& d : t.definitions()) CHECK_MESSAGE(alpha_equal(back(d.body), d.body), (name + "/" + d.name));
    }
  }

  TEST_CASE("the reader serves bundled files and falls back otherwise") {
    auto paths = corpus_paths();
    for (const char* p : {"corpus/models/z3.model", "corpus/models/left-zero.model", "corpus/monoid.thy"})
      CHECK(std::find(paths.begin(), paths.end(), p) != paths.end());
    CHECK_FALSE(corpus_reader()("corpus/none.thy"));
    FileReader fallback = [](const std::string& p) -> std::optional<std::string> {
      if (p == "extra.thy") return std::string("theory X\nend\n");
      return std::nullopt;
    };
    CHECK(corpus_reader(fallback)("extra.thy"));
    CHECK(bundled_text("corpus/monoid.thy").find("theory MON") != std::string::npos);
  }

  TEST_CASE("loading is deterministic") {
    std::vector<std::string> paths;
    for (const auto& e : corpus_entries()) paths.push_back(e.path);
    Workspace a = load_sources(paths, corpus_reader());
    Workspace b = load_sources(paths, corpus_reader());
    CHECK(a.theory_order == b.theory_order);
    CHECK(a.morphism_order == b.morphism_order);
    for (const auto& name : a.theory_order)
      CHECK(render_theory_source(a.graph.theory(name)) == render_theory_source(b.graph.theory(name)));
  }
}
