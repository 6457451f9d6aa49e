#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alonzo/theory.hpp"

namespace alonzo {

/// A semantic value in a finite standard model.
///
/// Functions are tables indexed by the position of the argument in the
/// canonical enumeration of the domain type; absent points hold Undef.
/// Sets hold their members sorted. `Unknown` only arises while searching
/// over partial interpretations and never escapes the search.
class Value {
 public:
  enum class Kind : std::uint8_t { Undef, Unknown, Elem, Truth, Func, Tuple, Set };

  Value() = default;
  static Value undef() { return Value(); }
  static Value unknown() { return Value(Kind::Unknown, 0, nullptr); }
  static Value elem(int index) { return Value(Kind::Elem, index, nullptr); }
  static Value truth(bool b) { return Value(Kind::Truth, b ? 1 : 0, nullptr); }
  static Value func(std::vector<Value> table);
  static Value tuple(Value a, Value b);
  /// Members are sorted and deduplicated.
  static Value set(std::vector<Value> members);

  Kind kind() const { return kind_; }
  bool is_undef() const { return kind_ == Kind::Undef; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }
  bool defined() const { return kind_ != Kind::Undef && kind_ != Kind::Unknown; }
  int index() const { return atom_; }
  bool truth_value() const { return atom_ != 0; }
  const std::vector<Value>& items() const { return *items_; }

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  Value(Kind k, int atom, std::shared_ptr<const std::vector<Value>> items)
      : kind_(k), atom_(atom), items_(std::move(items)) {}

  Kind kind_ = Kind::Undef;
  int atom_ = 0;
  std::shared_ptr<const std::vector<Value>> items_;
};

/// Finite carriers for the base types plus interpretations of the primitive
/// constants. Defined constants are evaluated from their definitions.
struct FiniteModel {
  std::string name;
  std::string theory;
  std::map<std::string, std::vector<std::string>> carriers;
  std::map<std::string, Value> interp;
};

/// Canonical enumeration of the values of each type over a model's carriers.
/// Base elements in carrier order; Bool as false, true; functions with a
/// Boolean codomain are total, all other functions may be partial.
class Domains {
 public:
  explicit Domains(const FiniteModel& m, std::size_t limit = 1u << 20);

  /// Throws SearchSpaceTooLarge when the type has more than `limit` values.
  const std::vector<Value>& values(const Type& t);
  std::size_t size(const Type& t) { return values(t).size(); }
  /// Position of `v` in `values(t)`.
  std::size_t index_of(const Type& t, const Value& v);
  /// Whether `v` is a well-formed value of type `t`.
  bool well_formed(const Type& t, const Value& v);

 private:
  struct Entry {
    std::vector<Value> values;
    std::map<Value, std::size_t> index;
  };
  Entry& entry(const Type& t);

  const FiniteModel& model_;
  std::size_t limit_;
  std::map<Type, Entry> cache_;
};

using ValueEnv = std::map<std::string, Value>;

/// Standard-model evaluator implementing the traditional approach to
/// undefinedness: non-Boolean terms may be Undef, Boolean terms never are.
class Evaluator {
 public:
  /// `theory`, when given, supplies the definitions of defined constants.
  Evaluator(const FiniteModel& m, const Theory* theory = nullptr);
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  /// `env` binds free variables by name.
  Value eval(const Expr& e, const ValueEnv& env = {});

  Domains& domains() { return domains_; }

  /// Three-valued mode used by the countermodel search: unassigned table
  /// cells are Unknown and anything outside the first-order fragment that
  /// depends on them evaluates to Unknown.
  void set_partial(bool on) {
    partial_ = on;
    defined_cache_.clear();
  }
  /// Replaces a constant's interpretation.
  void set_constant(const std::string& name, const Value& v) {
    model_.interp[name] = v;
    defined_cache_.clear();
  }

  const FiniteModel& model() const { return model_; }

 private:
  struct Frame {
    const std::string* name;
    const Type* type;
    Value value;
  };
  Value go(const Expr& e);
  Value go_raw(const Expr& e);
  Value apply(const Type& fun_type, const Value& f, const Value& a);
  Value constant(const Expr& c);
  Value lookup(const Expr& v);
  std::optional<bool> equal3(const Value& a, const Value& b) const;

  FiniteModel model_;
  const Theory* theory_;
  Domains domains_;
  std::vector<Frame> stack_;
  const ValueEnv* env_ = nullptr;
  std::map<std::string, Value> defined_cache_;
  bool partial_ = false;
};

/// Throws ModelDoesNotMatchSignature unless `m` interprets exactly the
/// primitive vocabulary of `t` with well-formed values.
void check_model(const Theory& t, const FiniteModel& m);

struct SentenceCheck {
  bool value = false;
  /// Axioms of the theory that are false in the model.
  std::vector<std::string> failed_axioms;
};

/// Evaluates `sentence` in `m` and checks every axiom of `t`.
SentenceCheck check_sentence(const Theory& t, const FiniteModel& m, const Expr& sentence);
/// Looks `name` up among the axioms and theorems of `t`. Throws UnknownItem.
SentenceCheck check_sentence(const Theory& t, const FiniteModel& m, const std::string& name);

struct SearchOptions {
  int max_size = 3;
  /// Maximum number of search nodes before giving up.
  std::uint64_t node_budget = 20'000'000;
  /// Disables three-valued pruning (used to test exhaustiveness).
  bool prune = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
};

/// Searches for a model of `t` in which `conjecture` is false, trying carrier
/// sizes in order of their largest component and then lexicographically.
/// The first countermodel in enumeration order is returned. Throws
/// InfiniteOnlyTheory, SearchSpaceTooLarge.
std::optional<FiniteModel> find_countermodel(const Theory& t, const Expr& conjecture,
                                             const SearchOptions& opts = {},
                                             SearchStats* stats = nullptr);

/// Prints `v` of type `t` using the carrier names of `m`.
std::string format_value(const FiniteModel& m, const Type& t, const Value& v);

/// Model file text: carriers, constants, tables.
std::string format_model(const Theory& t, const FiniteModel& m);

/// Parses a model file against `t`. Throws SyntaxError, InvalidModel,
/// ModelDoesNotMatchSignature.
FiniteModel parse_model(std::string_view text, const Theory& t, const std::string& file = {});

/// Reads the `for <theory>` header of a model file without parsing the rest.
std::optional<std::string> model_theory_name(std::string_view text);

}  // namespace alonzo
