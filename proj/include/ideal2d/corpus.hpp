// Deterministic random corpus of complete m-primary monomial ideals.
#pragma once

#include <cstdint>
#include <vector>

#include "ideal2d/staircase.hpp"

namespace ideal2d {

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::int64_t count = 200;
  std::int64_t max_order = 5;
  std::int64_t max_exponent = 12;
};

/// Complete m-primary ideals with order at most max_order and pure-power
/// exponents at most max_exponent. The sequence depends only on the spec.
std::vector<MonomialIdeal> random_complete_ideals(const CorpusSpec& spec);

}  // namespace ideal2d
