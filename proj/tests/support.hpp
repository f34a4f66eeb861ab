// Independent reference implementations used to cross-check the library:
// brute-force membership, lattice-point counting, power-based closure
// membership, and small random ideal generators. Everything here is written
// against the definitions, not against the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ideal2d/staircase.hpp"

namespace ideal2d::oracle {

/// Membership by scanning every generator for divisibility.
inline bool divisible_by_any(const std::vector<Exponent>& gens,
                             const Exponent& e) {
  for (const Exponent& g : gens) {
    if (g.i <= e.i && g.j <= e.j) return true;
  }
  return false;
}

/// Minimal generators by pairwise domination, quadratic on purpose.
inline std::vector<Exponent> oracle_min_gens(std::vector<Exponent> raw) {
  std::sort(raw.begin(), raw.end(), [](const Exponent& a, const Exponent& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Exponent> out;
  for (std::size_t t = 0; t < raw.size(); ++t) {
    bool dominated = false;
    for (std::size_t u = 0; u < raw.size() && !dominated; ++u) {
      if (u == t) continue;
      dominated = raw[u].i <= raw[t].i && raw[u].j <= raw[t].j;
    }
    if (!dominated) out.push_back(raw[t]);
  }
  return out;
}

/// Colength by counting the lattice points outside the staircase. The grid
/// [0, A) x [0, B) suffices because any point with i >= A or j >= B is a
/// multiple of the corresponding pure power.
inline Int grid_colength(const std::vector<Exponent>& gens) {
  std::int64_t max_i = 0;
  std::int64_t max_j = 0;
  for (const Exponent& g : gens) {
    max_i = std::max(max_i, g.i);
    max_j = std::max(max_j, g.j);
  }
  Int count = 0;
  for (std::int64_t i = 0; i < max_i; ++i) {
    for (std::int64_t j = 0; j < max_j; ++j) {
      if (!divisible_by_any(gens, {i, j})) ++count;
    }
  }
  return count;
}

/// All pairwise sums, deduplicated and reduced to minimal elements.
inline std::vector<Exponent> naive_product(const std::vector<Exponent>& a,
                                           const std::vector<Exponent>& b) {
  std::vector<Exponent> sums;
  sums.reserve(a.size() * b.size());
  for (const Exponent& p : a) {
    for (const Exponent& q : b) sums.push_back(p + q);
  }
  return oracle_min_gens(std::move(sums));
}

/// Membership of e in the integral closure, tested from the definition via
/// powers: e is integral over the ideal exactly when k*e lies in the k-th
/// power for some k. For staircases with exponents at most 12 the hull edge
/// denominators divide 12, so k <= 30 is more than enough.
inline bool closure_member(const std::vector<Exponent>& gens,
                           const Exponent& e) {
  std::vector<Exponent> power = {{0, 0}};
  for (std::int64_t k = 1; k <= 30; ++k) {
    power = naive_product(power, gens);
    if (divisible_by_any(power, {k * e.i, k * e.j})) return true;
  }
  return false;
}

/// Random m-primary generating set: pure powers in both variables plus a
/// few random points, exponents at most max_exp.
inline std::vector<Exponent> random_m_primary_gens(std::mt19937_64& rng,
                                                   std::int64_t max_exp) {
  const auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % (hi - lo + 1));
  };
  std::vector<Exponent> gens = {{draw(1, max_exp), 0}, {0, draw(1, max_exp)}};
  const std::int64_t extras = draw(0, 4);
  for (std::int64_t t = 0; t < extras; ++t) {
    gens.push_back({draw(0, max_exp), draw(0, max_exp)});
  }
  return gens;
}

}  // namespace ideal2d::oracle
