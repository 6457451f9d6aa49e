#pragma once

#include <map>
#include <random>
#include <string>

#include "alonzo/model.hpp"
#include "oracle.hpp"
#include "term_gen.hpp"

namespace alonzo::testing {

/// Base type M with a mix of first-order, partial, higher-order, set and
/// product constants.
Signature oracle_signature();

/// Generator settings whose binder types keep every domain small.
GenConfig oracle_config(int max_depth);

/// A random model of `sig` with every carrier of size 1 to `max_size`.
/// Non-Boolean function tables leave some points undefined.
FiniteModel random_model(const Signature& sig, std::mt19937_64& rng, int max_size);

/// The oracle's view of `m`.
Oracle oracle_for(const Signature& sig, const FiniteModel& m);

/// A theory holding just the language of `sig`.
Theory theory_of(const std::string& name, const Signature& sig);

}  // namespace alonzo::testing
