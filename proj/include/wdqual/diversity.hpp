// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <map>
#include <stdexcept>

#include "wdqual/entity_id.hpp"

namespace wdqual {

// Non-negative weights per property. Ordered keys keep every reduction
// over the map deterministic, which is what makes score CSVs
// byte-identical across runs and shard counts.
using AbundanceMap = std::map<PropertyId, double>;

struct EmptyAbundanceError : std::invalid_argument {
  EmptyAbundanceError() : std::invalid_argument("empty abundance") {}
};

// Normalizes weights to sum to 1 (within 1e-12) and drops zero-weight
// keys. Throws EmptyAbundanceError when the total weight is zero.
AbundanceMap relative_frequencies(const AbundanceMap& m);

// Effective number of types: exp of the Shannon entropy of the map's
// relative frequencies, natural log, zero-weight terms contributing 0.
// Equals R for R equally-weighted keys and 1 for a single key. The
// entropy is accumulated with Kahan compensation so the value does not
// depend on rounding luck in long tails.
double hill_diversity(const AbundanceMap& m);

}  // namespace wdqual
