#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alonzo/theory.hpp"

namespace alonzo {

enum class MorphismKind { Inclusion, General };

struct DischargedByAxiom {
  std::string axiom;
  friend bool operator==(const DischargedByAxiom&, const DischargedByAxiom&) = default;
};
struct DischargedByTheorem {
  std::string theorem;
  friend bool operator==(const DischargedByTheorem&, const DischargedByTheorem&) = default;
};
struct ModelEvidence {
  std::vector<std::string> models;
  friend bool operator==(const ModelEvidence&, const ModelEvidence&) = default;
};
struct Asserted {
  std::string justification;
  friend bool operator==(const Asserted&, const Asserted&) = default;
};
struct Open {
  friend bool operator==(const Open&, const Open&) = default;
};

using ObligationStatus =
    std::variant<DischargedByAxiom, DischargedByTheorem, ModelEvidence, Asserted, Open>;

std::string obligation_status_name(const ObligationStatus& s);
inline bool is_open(const ObligationStatus& s) { return std::holds_alternative<Open>(s); }

/// A translated source axiom that must hold in the target.
struct Obligation {
  std::string axiom;
  Expr sentence;
  ObligationStatus status;
};

struct Morphism {
  std::string id;
  std::string source;
  std::string target;
  MorphismKind kind = MorphismKind::General;
  /// Images of source base types. Empty for inclusions.
  std::map<std::string, Type> type_map;
  /// Images of source constants, closed terms over the target vocabulary.
  /// Empty for inclusions.
  std::map<std::string, Expr> const_map;
  /// One entry per source axiom, in source order.
  std::vector<Obligation> obligations;

  bool is_inclusion() const { return kind == MorphismKind::Inclusion; }
  const Obligation* obligation(const std::string& axiom) const;
  std::size_t open_count() const;
};

/// Throws UnmappedBaseType.
Type translate_type(const Morphism& m, const Type& t);

/// Homomorphic translation of a source expression. Defined source constants
/// without a const-map entry resolve to the target's transported counterpart
/// when there is one and are otherwise replaced by their translated bodies.
/// Throws UnmappedConstant, UnmappedBaseType.
Expr translate_expr(const Morphism& m, const Expr& e, const Theory& source, const Theory& target);

/// Checks totality and type coherence of `m`'s maps. Throws UnmappedBaseType,
/// UnmappedConstant, IllFormedMorphism.
void check_morphism(const Morphism& m, const Theory& source, const Theory& target);

/// Translates every source axiom. Each obligation starts Open and is
/// discharged when an alpha-equal target axiom or theorem exists.
std::vector<Obligation> generate_obligations(const Morphism& m, const Theory& source,
                                             const Theory& target);

/// Checks `m` and fills in its obligations. `declared` supplies explicit
/// statuses that override the automatic ones. Throws UnknownItem for a
/// declared status naming a missing axiom or target theorem.
Morphism elaborate_morphism(Morphism m, const Theory& source, const Theory& target,
                            const std::map<std::string, ObligationStatus>& declared = {});

/// Installs the translation of `item` (a theorem or definition of `source`)
/// in `target`. The new item is named `item@m.id` unless `as` is given; a
/// transported definition's constant is named the same way. Transporting an
/// item that is already present with the same provenance and statement is a
/// no-op. Throws OpenObligations, UnknownItem, NameClash.
Theory transport(const Morphism& m, const Theory& source, const Theory& target,
                 const std::string& item, const std::optional<std::string>& as = std::nullopt);

/// The statement `transport` would install: the translated theorem, or the
/// translated definition body.
Expr transported_statement(const Morphism& m, const Theory& source, const Theory& target,
                           const std::string& item);

/// The morphism `m1;m2` from m1's source to m2's target. Throws
/// TheoryMismatch when m1's target is not m2's source.
Morphism compose(const Morphism& m1, const Morphism& m2, const Theory& source,
                 const Theory& middle, const Theory& target);

/// The identity morphism on `t` as a general morphism.
Morphism identity_morphism(const Theory& t, const std::string& id);

}  // namespace alonzo
