#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alonzo/kernel.hpp"
#include "alonzo/notation.hpp"

namespace alonzo {

struct Traditional {
  std::string text;
  friend bool operator==(const Traditional&, const Traditional&) = default;
};
struct ModelChecked {
  std::vector<std::string> models;
  friend bool operator==(const ModelChecked&, const ModelChecked&) = default;
};
struct Assumed {
  friend bool operator==(const Assumed&, const Assumed&) = default;
};
/// Where a transported item came from.
struct Transported {
  std::string source_theory;
  std::string morphism;
  std::string source_item;
  friend bool operator==(const Transported&, const Transported&) = default;
};

/// Free-approach proof status. Nothing here is checked.
using ProofRecord = std::variant<Traditional, ModelChecked, Assumed, Transported>;

std::string proof_status_name(const ProofRecord& p);

struct Axiom {
  std::string name;
  Expr sentence;
};

struct Definition {
  std::string name;
  std::string constant;
  Type type;
  Expr body;
  std::optional<Transported> provenance;
};

struct Theorem {
  std::string name;
  Expr sentence;
  ProofRecord proof;
};

enum class ItemKind { Axiom, Definition, Theorem };

struct ItemRef {
  ItemKind kind;
  std::string name;
};

/// A theory T = (L, Gamma) together with its development. Values are
/// immutable: every builder returns a new Theory.
class Theory {
 public:
  explicit Theory(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  /// The primitive language L, without defined constants.
  const Signature& base_signature() const { return base_; }
  /// L extended by every definition made so far.
  const Signature& vocabulary() const { return vocab_; }
  const NotationSet& notations() const { return notations_; }
  bool infinite_only() const { return infinite_only_; }

  const std::vector<Axiom>& axioms() const { return axioms_; }
  const std::vector<Definition>& definitions() const { return definitions_; }
  const std::vector<Theorem>& theorems() const { return theorems_; }
  /// Axioms, definitions and theorems in insertion order.
  const std::vector<ItemRef>& items() const { return items_; }

  const Axiom* find_axiom(const std::string& name) const;
  const Definition* find_definition(const std::string& name) const;
  const Definition* definition_of(const std::string& constant) const;
  const Theorem* find_theorem(const std::string& name) const;
  bool has_item(const std::string& name) const;

  Theory add_base_type(const std::string& name) const;
  Theory add_constant(const std::string& name, const Type& type) const;
  /// Throws NotASentence, DuplicateName.
  Theory add_axiom(const std::string& name, const Expr& sentence) const;
  /// Introduces `constant` with the type of `body`. Throws ConstantExists,
  /// NotClosed, DuplicateName and type errors.
  Theory add_definition(const std::string& name, const std::string& constant, const Expr& body,
                        std::optional<Transported> provenance = std::nullopt) const;
  /// Throws NotASentence, DuplicateName.
  Theory add_theorem(const std::string& name, const Expr& sentence, ProofRecord proof) const;
  Theory add_notation(const NotationDef& def) const;
  Theory set_infinite_only(bool flag) const;

  /// Merges `parent`'s language, axioms, definitions and notations into this
  /// theory. Items already present with the same content are skipped.
  /// Theorems are not inherited.
  Theory extend(const Theory& parent) const;

  /// The axiom `c = body` a definition stands for.
  static Expr defining_axiom(const Definition& d);

 private:
  void require_fresh_item(const std::string& name) const;

  std::string name_;
  Signature base_;
  Signature vocab_;
  NotationSet notations_;
  bool infinite_only_ = false;
  std::vector<Axiom> axioms_;
  std::vector<Definition> definitions_;
  std::vector<Theorem> theorems_;
  std::vector<ItemRef> items_;
};

/// Rebuilds the vocabulary by replaying the definitions of `t` in order
/// against its base signature.
Signature replay_vocabulary(const Theory& t);

}  // namespace alonzo
