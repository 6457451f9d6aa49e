#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alonzo/type.hpp"

namespace alonzo {

/// A typed variable. Two variables are the same variable iff both the name
/// and the type agree.
struct Variable {
  std::string name;
  Type type;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable& a, const Variable& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.type <=> b.type;
  }
};

/// Immutable kernel term. Nodes are shared; copying an Expr is a pointer copy.
///
/// Every node caches its structurally synthesized type (computed from the
/// types carried by variables, constants and binders). The cache is empty
/// when the node is ill-typed; `type_of` reports the precise error.
class Expr {
 public:
  enum class Kind {
    Var,
    Const,
    App,
    Abs,
    Eq,
    Iota,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,
    Exists,
    IsDefined,
    Pair,
    Proj1,
    Proj2,
    SetLit,
    Member,
    GuardedAbs,
  };

  static Expr var(std::string name, Type type);
  static Expr var(const Variable& v) { return var(v.name, v.type); }
  static Expr constant(std::string name, Type type);
  static Expr app(Expr fun, Expr arg);
  /// Curried application `fun(args[0])(args[1])...`.
  static Expr app(Expr fun, std::initializer_list<Expr> args);
  static Expr app(Expr fun, std::span<const Expr> args);
  static Expr abs(std::string bound, Type type, Expr body);
  static Expr eq(Expr lhs, Expr rhs);
  static Expr iota(std::string bound, Type type, Expr body);
  static Expr not_(Expr e);
  static Expr and_(Expr l, Expr r);
  static Expr or_(Expr l, Expr r);
  static Expr implies(Expr l, Expr r);
  static Expr iff(Expr l, Expr r);
  static Expr forall(std::string bound, Type type, Expr body);
  static Expr exists(std::string bound, Type type, Expr body);
  static Expr is_defined(Expr e);
  static Expr pair(Expr l, Expr r);
  static Expr proj1(Expr e);
  static Expr proj2(Expr e);
  static Expr set_lit(Type elem, std::vector<Expr> members);
  static Expr member(Expr e, Expr set);
  static Expr guarded_abs(std::string bound, Type type, Expr guard, Expr body);

  /// Rebuilds a node of the same kind with new children (and optionally a
  /// new bound-variable name and type).
  Expr with_children(std::vector<Expr> children) const;
  Expr with_binder(std::string name, Type type, std::vector<Expr> children) const;

  Kind kind() const { return rep_->kind; }
  bool is(Kind k) const { return kind() == k; }
  bool is_binder() const;
  bool is_quantifier() const { return is(Kind::Forall) || is(Kind::Exists); }

  /// Variable/constant name, or the bound variable's name for binders.
  const std::string& name() const { return rep_->name; }
  /// Variable/constant type, binder variable type, or SetLit element type.
  const Type& decl_type() const { return *rep_->decl_type; }
  Variable bound_var() const { return {name(), decl_type()}; }

  const std::vector<Expr>& children() const { return rep_->children; }
  const Expr& child(std::size_t i) const { return rep_->children[i]; }
  std::size_t arity() const { return rep_->children.size(); }

  /// Body of a binder (for GuardedAbs the guard is child 0).
  const Expr& body() const { return rep_->children.back(); }
  const Expr& guard() const { return rep_->children[0]; }
  const Expr& fun() const { return rep_->children[0]; }
  const Expr& arg() const { return rep_->children[1]; }
  const Expr& lhs() const { return rep_->children[0]; }
  const Expr& rhs() const { return rep_->children[1]; }

  /// Structurally synthesized type; empty if the node is ill-typed.
  const std::optional<Type>& type() const { return rep_->type; }

  /// Number of nodes.
  std::size_t size() const { return rep_->size; }
  std::size_t depth() const { return rep_->depth; }

  /// True iff both refer to the same node object.
  bool same_node(const Expr& other) const { return rep_ == other.rep_; }

  /// Exact structural equality (bound variable names must agree).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Rep {
    Kind kind;
    std::string name;
    std::optional<Type> decl_type;
    std::vector<Expr> children;
    std::optional<Type> type;
    std::size_t size = 1;
    std::size_t depth = 1;
  };
  static Expr make(Kind kind, std::string name, std::optional<Type> decl,
                   std::vector<Expr> children);
  explicit Expr(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

std::string_view kind_name(Expr::Kind kind);

}  // namespace alonzo
