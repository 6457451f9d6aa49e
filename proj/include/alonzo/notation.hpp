#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "alonzo/error.hpp"
#include "alonzo/expr.hpp"
#include "alonzo/kernel.hpp"

namespace alonzo {

/// Surface forms a notational definition can take. `K` is the sugar name.
///
///   BinderOverRange    K i = LO to HI of BODY
///   BinderAt           K x -> POINT of BODY
///   BinderPlain        K n of BODY
///   BinderWithBounds   K from LO to HI of BODY dx
enum class NotationShape { BinderOverRange, BinderAt, BinderPlain, BinderWithBounds };

/// A syntactic slot of a sugar instance. `Body` is the binder-abstracted
/// operand; the others are ordinary operands outside the binder's scope.
enum class NotationSlot { Lo, Hi, Point, Body };

std::string_view shape_name(NotationShape shape);
std::optional<NotationShape> shape_from_name(std::string_view name);
std::string_view slot_name(NotationSlot slot);
std::optional<NotationSlot> slot_from_name(std::string_view name);
/// Slots a shape provides, in surface order.
std::vector<NotationSlot> shape_slots(NotationShape shape);

/// A notational definition: `sugar` stands for `target` applied (Curried) to
/// the slots in `argument_order`, with the body slot abstracted over the
/// binder variable.
struct NotationDef {
  std::string sugar_name;
  NotationShape shape = NotationShape::BinderPlain;
  std::string target;
  std::vector<NotationSlot> argument_order;
  /// Binder variable type, or the name of a set constant the binder ranges over.
  std::variant<Type, std::string> binder = Type::boolean();
  /// LaTeX operator, e.g. `\sum`; empty means `\operatorname{sugar}`.
  std::string latex;

  // Filled in by register_notation.
  std::optional<Type> target_type;
  std::optional<Type> binder_type;

  bool guarded() const { return std::holds_alternative<std::string>(binder); }
};

/// Operands of one sugar instance.
struct NotationInstance {
  std::string var;
  std::optional<Expr> lo, hi, point;
  Expr body;
};

/// Builds the kernel term a sugar instance stands for. `def` must be registered.
Expr expand_notation(const NotationDef& def, const NotationInstance& inst);

/// Immutable, registration-ordered set of notational definitions.
class NotationSet {
 public:
  const std::vector<NotationDef>& defs() const { return defs_; }
  const NotationDef* find(std::string_view sugar) const;
  std::size_t size() const { return defs_.size(); }

 private:
  friend NotationSet register_notation(const NotationSet&, NotationDef, const Signature&);
  std::vector<NotationDef> defs_;
};

/// Returns `set` extended with `def`. Throws DuplicateNotation,
/// UnknownConstant, or IncompatibleShape.
NotationSet register_notation(const NotationSet& set, NotationDef def, const Signature& sig);

/// Parses a term of the surface language, expanding registered sugar and
/// elaborating chained relations. `origin` locates the first character of
/// `text` for diagnostics. Throws SyntaxError and type errors with spans.
Expr parse_expr(std::string_view text, const Signature& sig, const NotationSet& notations,
                const TypeEnv& env = {}, const SourceSpan& origin = {});

Type parse_type(std::string_view text, const Signature& sig, const SourceSpan& origin = {});

/// Compact ASCII rendering; reparses to an alpha-equal term.
std::string print_compact(const Expr& e, const NotationSet& notations = {});
/// LaTeX math-mode rendering.
std::string print_latex(const Expr& e, const NotationSet& notations = {});
std::string latex_type(const Type& t);

/// True for constant names that print infix (`+ - * / · < <= > >=`).
bool is_infix_operator(std::string_view name);

}  // namespace alonzo
