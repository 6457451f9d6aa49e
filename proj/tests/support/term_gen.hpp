#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alonzo/kernel.hpp"

namespace alonzo::testing {

struct GenConfig {
  int max_depth = 4;
  /// Types a binder (quantifier, lambda, iota) may range over.
  std::vector<Type> binder_types;
  /// Types compared by generated equations and used as side types.
  std::vector<Type> side_types;
  std::vector<std::string> var_names = {"x", "y", "z"};
  /// Probability of choosing a lambda for an argument of function type.
  double lambda_bias = 0.3;
  /// Sets that lambdas may be guarded by (constants of set type).
  std::vector<std::string> guard_sets;
};

/// Random well-typed terms over a signature.
class TermGen {
 public:
  TermGen(Signature sig, GenConfig cfg, std::uint64_t seed);

  /// A term of type `t` with the given free variables in scope.
  Expr term(const Type& t, const std::vector<Variable>& free = {});
  /// A closed Boolean term.
  Expr sentence() { return term(Type::boolean()); }

  std::mt19937_64& rng() { return rng_; }

 private:
  Expr gen(const Type& t, int depth);
  Expr leaf(const Type& t, int depth);
  bool app_candidates(const Type& t, std::vector<std::pair<Expr, Type>>& heads);
  std::vector<Expr> visible_vars(const Type& t) const;
  const Type& pick(const std::vector<Type>& ts);
  const std::string& pick_name();
  int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  Expr bind(Expr::Kind kind, const Type& t, const Type& body_type, int depth);

  Signature sig_;
  GenConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<Variable> scope_;
};

}  // namespace alonzo::testing
