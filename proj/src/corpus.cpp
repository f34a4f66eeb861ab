#include "ideal2d/corpus.hpp"

#include <random>

#include "ideal2d/newton.hpp"

namespace ideal2d {

namespace {

// Unbiased draw from [0, n) via rejection; fixed across platforms because
// mt19937_64 itself is fully specified.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  check_internal(n > 0, "empty draw range");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % n;
}

}  // namespace

std::vector<MonomialIdeal> random_complete_ideals(const CorpusSpec& spec) {
  if (spec.count < 0 || spec.max_order < 1 || spec.max_exponent < 1) {
    throw DomainError("invalid corpus parameters");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<MonomialIdeal> out;
  out.reserve(spec.count);
  for (std::int64_t t = 0; t < spec.count; ++t) {
    std::int64_t px =
        1 + static_cast<std::int64_t>(below(rng, spec.max_exponent));
    std::int64_t py =
        1 + static_cast<std::int64_t>(below(rng, spec.max_exponent));
    std::vector<Exponent> points{{px, 0}, {0, py}};
    std::uint64_t extras = below(rng, 4);
    for (std::uint64_t k = 0; k < extras; ++k) {
      if (px < 2 || py < 2) break;
      std::int64_t i = 1 + static_cast<std::int64_t>(below(rng, px - 1));
      std::int64_t j = 1 + static_cast<std::int64_t>(below(rng, py - 1));
      points.push_back({i, j});
    }
    MonomialIdeal raw(points);
    if (raw.order() > spec.max_order) {
      std::int64_t k =
          static_cast<std::int64_t>(below(rng, spec.max_order + 1));
      points.push_back({k, spec.max_order - k});
      raw = MonomialIdeal(points);
    }
    out.push_back(integral_closure(raw));
  }
  return out;
}

}  // namespace ideal2d
