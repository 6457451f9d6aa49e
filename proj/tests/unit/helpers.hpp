#pragma once

#include <functional>
#include <optional>

#include "alonzo/corpus.hpp"
#include "doctest.h"

namespace alonzo::testing {

/// The code of the Error `f` throws, if any.
inline std::optional<ErrorCode> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// MON's language with `*` as the operator, for surface examples written
/// with an ASCII star.
inline Signature star_monoid() {
  Signature sig;
  sig.add_base_type("M");
  Type m = Type::base("M");
  sig.add_constant("*", Type::fun(m, Type::fun(m, m)));
  sig.add_constant("e", m);
  return sig;
}

inline const Theory& corpus_theory(const std::string& name) { return load_corpus().graph().theory(name); }

}  // namespace alonzo::testing
