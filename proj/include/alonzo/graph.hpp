#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alonzo/morphism.hpp"

namespace alonzo {

/// A directed multigraph of theories and morphisms. Parallel edges and
/// self-loops are allowed. Values are immutable.
class TheoryGraph {
 public:
  /// Throws DuplicateName.
  TheoryGraph add_theory(const Theory& t) const;
  /// Throws DuplicateName, DanglingEndpoint.
  TheoryGraph add_morphism(const Morphism& m) const;
  /// Replaces a theory of the same name. Throws UnknownTheory.
  TheoryGraph replace_theory(const Theory& t) const;

  bool has_theory(const std::string& name) const { return theories_.count(name) > 0; }
  bool has_morphism(const std::string& id) const { return morphisms_.count(id) > 0; }
  /// Throws UnknownTheory.
  const Theory& theory(const std::string& name) const;
  /// Throws UnknownItem.
  const Morphism& morphism(const std::string& id) const;

  const std::map<std::string, Theory>& theories() const { return theories_; }
  const std::map<std::string, Morphism>& morphisms() const { return morphisms_; }

  /// Restriction to the named theories and morphisms.
  TheoryGraph subgraph(const std::vector<std::string>& theories,
                       const std::vector<std::string>& morphisms) const;

 private:
  std::map<std::string, Theory> theories_;
  std::map<std::string, Morphism> morphisms_;
};

using Path = std::vector<std::string>;

/// All edge sequences of length at most `max_length` from `from` to `to`,
/// ordered lexicographically by morphism id. The empty path is included when
/// `from == to`. Throws UnknownTheory.
std::vector<Path> paths(const TheoryGraph& g, const std::string& from, const std::string& to,
                        int max_length);

/// Translation of `e` along `path`, one morphism at a time.
Expr translate_along(const TheoryGraph& g, const Path& path, const Expr& e);

struct AvailableItem {
  std::string origin;
  std::string item;
  ItemKind kind;
  /// The item's statement (theorem sentence or definition body) as seen in
  /// the queried theory.
  Expr statement;
  /// Canonical provenance: shortest path, then lexicographically least.
  Path path;
};

/// Every theorem and definition that reaches `theory` along some path of at
/// most `max_length` morphisms. Items whose translations coincide are
/// reported once. Throws UnknownTheory.
std::vector<AvailableItem> available_items(const TheoryGraph& g, const std::string& theory,
                                           int max_length);

struct MorphismSummary {
  std::string id;
  std::string source;
  std::string target;
  bool inclusion = false;
  std::size_t discharged = 0;
  std::size_t model = 0;
  std::size_t asserted = 0;
  std::size_t open = 0;
  std::vector<std::string> open_axioms;
};

struct TheoryStatus {
  std::string name;
  std::vector<std::string> errors;
};

struct ValidationReport {
  std::vector<MorphismSummary> morphisms;
  std::vector<TheoryStatus> theories;
  std::vector<std::string> dangling;

  std::size_t open_count() const;
  std::size_t error_count() const;
  bool clean() const { return open_count() == 0 && error_count() == 0 && dangling.empty(); }
};

/// Checks that a transported item's provenance resolves and that
/// re-translating the source reproduces `stored`. Returns the problem, if any.
std::optional<std::string> provenance_problem(const TheoryGraph& g, const Theory& t,
                                              const Transported& p, const Expr& stored);

/// Obligation summary per morphism, per-theory type-check status, and
/// unresolved references.
ValidationReport validate(const TheoryGraph& g);

}  // namespace alonzo
