#pragma once

#include <map>
#include <set>
#include <string>

#include "alonzo/error.hpp"
#include "alonzo/expr.hpp"
#include "alonzo/type.hpp"

namespace alonzo {

/// The nonlogical vocabulary of a language: base types and typed constants.
class Signature {
 public:
  /// Throws DuplicateName if the base type is already declared.
  void add_base_type(const std::string& name);
  /// Throws ConstantExists if the name is taken, UnknownBaseType if the type
  /// mentions an undeclared base type.
  void add_constant(const std::string& name, const Type& type);

  bool has_base_type(const std::string& name) const { return base_types_.count(name) > 0; }
  bool has_constant(const std::string& name) const { return constants_.count(name) > 0; }
  /// Throws UnknownConstant.
  const Type& constant_type(const std::string& name) const;
  Expr constant(const std::string& name) const {
    return Expr::constant(name, constant_type(name));
  }

  /// Throws UnknownBaseType if `t` mentions an undeclared base type.
  void check_type(const Type& t) const;

  const std::set<std::string>& base_types() const { return base_types_; }
  const std::map<std::string, Type>& constants() const { return constants_; }
  bool empty() const { return base_types_.empty() && constants_.empty(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::set<std::string> base_types_;
  std::map<std::string, Type> constants_;
};

using TypeEnv = std::map<std::string, Type>;

/// Synthesizes the unique type of `e` against `sig`. Free variables carry
/// their own types; when `env` binds a free variable's name its type must
/// agree. Throws Error (UnknownConstant, UnknownBaseType, TypeMismatch,
/// NonBooleanBinderBody).
Type type_of(const Expr& e, const Signature& sig, const TypeEnv& env = {});

/// Capture-avoiding substitution of `value` for the free occurrences of `x`.
/// Bound variables that would capture a free variable of `value` are renamed
/// with `fresh_name`.
Expr substitute(const Expr& e, const Variable& x, const Expr& value);
/// Substitutes for the variable named `x` whose type is the type of `value`.
Expr substitute(const Expr& e, const std::string& x, const Expr& value);

/// Equality up to consistent renaming of bound variables.
bool alpha_equal(const Expr& a, const Expr& b);

std::set<Variable> free_vars(const Expr& e);
bool occurs_free(const Variable& x, const Expr& e);
/// Names of every variable occurring in `e`, free or bound.
void collect_var_names(const Expr& e, std::set<std::string>& out);
/// Names of every constant occurring in `e`.
void collect_constant_names(const Expr& e, std::set<std::string>& out);

/// Closed and Boolean-typed over `sig`.
bool is_sentence(const Expr& e, const Signature& sig);

/// `base` with trailing digits stripped and the smallest positive numeric
/// suffix appended such that the result is not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Fully parenthesized formal rendering used in diagnostics.
std::string debug_string(const Expr& e);

/// A string that is equal for two terms iff they are alpha-equal.
std::string canonical_key(const Expr& e);

}  // namespace alonzo
