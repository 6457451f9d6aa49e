#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alonzo/graph.hpp"

namespace alonzo {

struct Diagnostic {
  SourceSpan span;
  ErrorCode code;
  std::string message;
};

/// `file:line:col: error: Code: message`.
std::string format_diagnostic(const Diagnostic& d);

/// Where a block sits in its file. `end_line` is the line of its `end`.
struct BlockLocation {
  std::string file;
  int line = 0;
  int end_line = 0;
};

struct GraphDecl {
  std::string name;
  std::vector<std::string> theories;
  std::vector<std::string> morphisms;
  SourceSpan span;
};

/// Everything elaborated from a set of source files, in declaration order.
struct Workspace {
  TheoryGraph graph;
  std::vector<std::string> theory_order;
  std::vector<std::string> morphism_order;
  std::map<std::string, BlockLocation> theory_locations;
  std::map<std::string, BlockLocation> morphism_locations;
  std::vector<GraphDecl> graphs;
  std::map<std::string, std::string> texts;
  /// Sorted by file, line, column.
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
  const GraphDecl* find_graph(const std::string& name) const;
  /// Diagnostics for every Open obligation, located at the morphism header.
  std::vector<Diagnostic> open_obligation_diagnostics() const;
};

/// Returns the file's contents, or nothing when it cannot be read.
using FileReader = std::function<std::optional<std::string>(const std::string& path)>;

FileReader disk_reader();

/// Parses and elaborates `paths` in order. Blocks that fail are skipped and
/// reported; loading continues with the next statement or block.
Workspace load_sources(const std::vector<std::string>& paths, const FileReader& read);
Workspace load_files(const std::vector<std::string>& paths);

/// Source text for a theory, flattened: inherited content is written out.
std::string render_theory_source(const Theory& t);
std::string render_morphism_source(const Morphism& m, const Theory& source,
                                   const Theory& target);
/// Lines for one item in theory-body form, indented by two spaces.
std::string render_item_source(const Theory& t, const std::string& item);

/// LaTeX for a theory or morphism using the alonzotheory and alonzomorphism
/// environments.
std::string render_theory_latex(const Theory& t);
std::string render_morphism_latex(const Morphism& m, const Theory& source,
                                  const Theory& target);

}  // namespace alonzo
