#pragma once

#include <string>
#include <vector>

#include "alonzo/source.hpp"

namespace alonzo {

enum class CorpusKind { Theory, Morphism, Graph, Notation };

struct CorpusStats {
  std::size_t axioms = 0;
  std::size_t definitions = 0;
  std::size_t theorems = 0;
  std::size_t obligations = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

/// One bundled source file. Stats count the items of the theories and the
/// obligations of the morphisms the file declares.
struct CorpusEntry {
  std::string path;
  CorpusKind kind;
  CorpusStats expected;
};

/// Bundled theory-source files in load order.
const std::vector<CorpusEntry>& corpus_entries();

/// Reads bundled files (sources and models) by their corpus path, e.g.
/// `corpus/models/z3.model`, deferring to `fallback` for anything else.
FileReader corpus_reader(FileReader fallback = {});

/// All bundled file paths, sources and models.
std::vector<std::string> corpus_paths();

struct Corpus {
  Workspace workspace;
  /// The notations of COF (sum, lim, lim-seq, integral).
  NotationSet notations;

  const TheoryGraph& graph() const { return workspace.graph; }
  /// The monoid theory graph: 12 theories, 18 morphisms.
  TheoryGraph monoid_graph() const;
};

/// Loads every bundled file. Throws std::logic_error if the bundled files do
/// not check, which the build already rules out.
const Corpus& load_corpus();

/// Re-counts the stats of `entry` in `ws`.
CorpusStats corpus_stats(const Workspace& ws, const std::string& path);

}  // namespace alonzo
