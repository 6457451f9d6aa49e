#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace alonzo {

/// A simple type: Bool, a named base type, or one of the function,
/// product and set-of constructors. Types are immutable and cheap to copy.
class Type {
 public:
  enum class Kind { Bool, Base, Fun, Prod, SetOf };

  static Type boolean();
  static Type base(std::string name);
  static Type fun(Type dom, Type cod);
  static Type prod(Type left, Type right);
  static Type set_of(Type elem);

  /// Curried function type `args[0] -> ... -> args[n-1] -> result`.
  template <typename Range>
  static Type curried(const Range& args, Type result) {
    std::vector<Type> v(std::begin(args), std::end(args));
    for (auto it = v.rbegin(); it != v.rend(); ++it) result = fun(*it, result);
    return result;
  }

  Kind kind() const { return rep_->kind; }
  bool is_bool() const { return kind() == Kind::Bool; }
  bool is_base() const { return kind() == Kind::Base; }
  bool is_fun() const { return kind() == Kind::Fun; }
  bool is_prod() const { return kind() == Kind::Prod; }
  bool is_set() const { return kind() == Kind::SetOf; }

  /// Base type name; empty for other kinds.
  const std::string& name() const { return rep_->name; }
  /// Domain of Fun, left of Prod, element of SetOf.
  const Type& first() const { return *rep_->first; }
  /// Codomain of Fun, right of Prod.
  const Type& second() const { return *rep_->second; }

  const Type& dom() const { return first(); }
  const Type& cod() const { return second(); }
  const Type& elem() const { return first(); }

  /// Number of arrows along the codomain spine.
  int arity() const;
  /// Result type after stripping all arrows.
  const Type& final_codomain() const;

  /// Base type names occurring anywhere in this type.
  void collect_base_types(std::set<std::string>& out) const;

  /// ASCII surface syntax, e.g. `(R -> R) -> R -> Bool`, `{R}`, `M * M`.
  std::string to_string() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Rep {
    Kind kind;
    std::string name;
    std::shared_ptr<const Type> first;
    std::shared_ptr<const Type> second;
  };
  explicit Type(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

}  // namespace alonzo
