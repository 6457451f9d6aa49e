#include <stdexcept>

#include "alonzo/corpus.hpp"

namespace alonzo {

namespace detail {
const std::map<std::string, std::string>& embedded_corpus();
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"corpus/monoid.thy", CorpusKind::Theory, {7, 8, 7, 0}},
      {"corpus/cof.thy", CorpusKind::Theory, {26, 7, 2, 0}},
      {"corpus/monoid-graph.thy", CorpusKind::Graph, {143, 52, 4, 162}},
      {"corpus/transport.thy", CorpusKind::Morphism, {0, 0, 0, 6}},
  };
  return entries;
}

FileReader corpus_reader(FileReader fallback) {
  return [fallback](const std::string& path) -> std::optional<std::string> {
    const auto& files = detail::embedded_corpus();
    if (auto it = files.find(path); it != files.end()) return it->second;
    if (fallback) return fallback(path);
    return std::nullopt;
  };
}

std::vector<std::string> corpus_paths() {
  std::vector<std::string> out;
  for (const auto& [path, text] : detail::embedded_corpus()) out.push_back(path);
  return out;
}

TheoryGraph Corpus::monoid_graph() const {
  const GraphDecl* g = workspace.find_graph("monoid");
  return workspace.graph.subgraph(g->theories, g->morphisms);
}

const Corpus& load_corpus() {
  static const Corpus corpus = [] {
    std::vector<std::string> paths;
    for (const auto& e : corpus_entries()) paths.push_back(e.path);
    Corpus c;
    c.workspace = load_sources(paths, corpus_reader());
    if (!c.workspace.ok() || !c.workspace.find_graph("monoid"))
      throw std::logic_error("bundled corpus does not check: " +
                             (c.workspace.ok() ? std::string("missing graph monoid")
                                               : format_diagnostic(c.workspace.diagnostics.front())));
    c.notations = c.workspace.graph.theory("COF").notations();
    return c;
  }();
  return corpus;
}

CorpusStats corpus_stats(const Workspace& ws, const std::string& path) {
  CorpusStats s;
  for (const auto& [name, loc] : ws.theory_locations) {
    if (loc.file != path) continue;
    const Theory& t = ws.graph.theory(name);
    s.axioms += t.axioms().size();
    s.definitions += t.definitions().size();
    s.theorems += t.theorems().size();
  }
  for (const auto& [id, loc] : ws.morphism_locations)
    if (loc.file == path) s.obligations += ws.graph.morphism(id).obligations.size();
  return s;
}

}  // namespace alonzo
