#pragma once

#include <map>
#include <string>
#include <vector>

#include "alonzo/model.hpp"

namespace alonzo::testing {

/// A value in the brute-force interpreter. Functions are stored as their
/// graph (defined points only, sorted by argument), sets as sorted members.
struct OVal {
  enum class Tag { Undef, Elem, Bool, Fun, Pair, Set };
  Tag tag = Tag::Undef;
  int atom = 0;
  std::vector<OVal> kids;
  /// For Fun: kids[2i] is an argument and kids[2i+1] its image.

  static OVal undef() { return {}; }
  static OVal elem(int i) { return {Tag::Elem, i, {}}; }
  static OVal boolean(bool b) { return {Tag::Bool, b ? 1 : 0, {}}; }
  static OVal pair(OVal a, OVal b) { return {Tag::Pair, 0, {std::move(a), std::move(b)}}; }
  static OVal set(std::vector<OVal> members);
  static OVal fun(std::vector<std::pair<OVal, OVal>> graph);

  bool undefined() const { return tag == Tag::Undef; }
  friend bool operator==(const OVal&, const OVal&) = default;
  friend auto operator<=>(const OVal& a, const OVal& b) {
    if (a.tag != b.tag) return a.tag <=> b.tag;
    if (a.atom != b.atom) return a.atom <=> b.atom;
    return a.kids <=> b.kids;
  }
};

std::string to_string(const OVal& v);

/// Every value of `t` given carrier sizes per base type.
std::vector<OVal> oracle_domain(const Type& t, const std::map<std::string, int>& sizes);

/// Converts a main-evaluator value into the oracle's representation.
OVal decode(Domains& d, const Type& t, const Value& v);

/// Naive recursive interpreter with its own typing. Constants are looked up
/// in `interp` with their declared types in `types`.
class Oracle {
 public:
  Oracle(std::map<std::string, int> sizes, std::map<std::string, OVal> interp);

  OVal eval(const Expr& e);

 private:
  struct Binding {
    std::string name;
    Type type;
    OVal value;
  };
  /// Type and value of `e`.
  std::pair<Type, OVal> go(const Expr& e);
  std::pair<Type, OVal> go_raw(const Expr& e);
  const std::vector<OVal>& domain(const Type& t);

  std::map<std::string, int> sizes_;
  std::map<std::string, OVal> interp_;
  std::vector<Binding> scope_;
  std::map<Type, std::vector<OVal>> domains_;
};

}  // namespace alonzo::testing
