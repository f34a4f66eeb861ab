#include "ideal2d/adjoint.hpp"

#include <algorithm>

namespace ideal2d {

namespace {

MonomialIdeal swap_axes(const MonomialIdeal& a) {
  std::vector<Exponent> gens;
  gens.reserve(a.num_min_gens());
  for (const Exponent& g : a.generators()) gens.push_back({g.j, g.i});
  return MonomialIdeal(std::move(gens));
}

// Contraction along the X chart: x^i y^j belongs to (1/x)*C exactly when
// (i + j + 1, j) belongs to C. Requires C to contain a pure power of x.
MonomialIdeal contract_x(const MonomialIdeal& c) {
  const auto& gens = c.generators();
  check_internal(gens.front().j == 0,
                 "chart contraction needs a pure power of the chart variable");
  std::vector<Exponent> points;
  std::size_t t = 0;
  for (std::int64_t j = 0;; ++j) {
    while (t + 1 < gens.size() && gens[t + 1].j <= j) ++t;
    std::int64_t min_i = gens[t].i;
    std::int64_t i = std::max<std::int64_t>(min_i - j - 1, 0);
    points.push_back({i, j});
    if (i == 0) break;
  }
  return MonomialIdeal(std::move(points));
}

MonomialIdeal contract_y(const MonomialIdeal& c) {
  return swap_axes(contract_x(swap_axes(c)));
}

struct ChartPair {
  MonomialIdeal from_x = MonomialIdeal::unit();
  MonomialIdeal from_y = MonomialIdeal::unit();
};

// Adjoint of a gcd-free (hence m-primary or unit) ideal. The adjoint only
// depends on the integral closure, so each level recurses on the closure.
// `parent_metric` carries the closure colength of the caller's ideal for
// the termination guard; it is negative at the root.
MonomialIdeal adjoint_primary(const MonomialIdeal& raw,
                              const Int& parent_metric, ChartPair* charts) {
  check_internal(raw.is_m_primary(),
                 "adjoint recursion on a non-m-primary ideal");
  const MonomialIdeal a = integral_closure(raw);
  Int metric = a.colength();
  if (parent_metric >= 0) {
    check_internal(metric < parent_metric,
                   "transform did not decrease the closure colength");
  }
  if (a.order() <= 1) return MonomialIdeal::unit();

  std::int64_t o = a.order();
  MonomialIdeal adj_x =
      adjoint_primary(transform(a, Chart::X), metric, nullptr);
  MonomialIdeal adj_y =
      adjoint_primary(transform(a, Chart::Y), metric, nullptr);
  MonomialIdeal from_x = contract_x(multiply(adj_x, {o, 0}));
  MonomialIdeal from_y = contract_y(multiply(adj_y, {0, o}));
  MonomialIdeal result = intersect(from_x, from_y);
  check_internal(result.contains(a), "adjoint does not contain the ideal");
  check_internal(is_complete(result), "adjoint is not integrally closed");
  if (charts != nullptr) {
    charts->from_x = std::move(from_x);
    charts->from_y = std::move(from_y);
  }
  return result;
}

void require_complete_for_core(const MonomialIdeal& a) {
  if (!a.is_m_primary() || !is_complete(a)) {
    throw DomainError("core formula requires a complete ideal");
  }
}

}  // namespace

MonomialIdeal adjoint(const MonomialIdeal& a) {
  Exponent g = a.gcd_exponent();
  std::vector<Exponent> stripped;
  stripped.reserve(a.num_min_gens());
  for (const Exponent& e : a.generators()) {
    stripped.push_back({e.i - g.i, e.j - g.j});
  }
  MonomialIdeal primary_part{std::move(stripped)};
  return multiply(adjoint_primary(primary_part, Int(-1), nullptr), g);
}

AdjointTrace adjoint_trace(const MonomialIdeal& a) {
  AdjointTrace trace;
  trace.input = a;
  trace.stripped_factor = a.gcd_exponent();
  std::vector<Exponent> stripped;
  stripped.reserve(a.num_min_gens());
  for (const Exponent& e : a.generators()) {
    stripped.push_back(
        {e.i - trace.stripped_factor.i, e.j - trace.stripped_factor.j});
  }
  MonomialIdeal primary_part{std::move(stripped)};
  if (primary_part.order() <= 1) {
    trace.result = MonomialIdeal::principal(trace.stripped_factor);
    return trace;
  }
  ChartPair charts;
  MonomialIdeal adj = adjoint_primary(primary_part, Int(-1), &charts);
  trace.chart_results = {charts.from_x, charts.from_y};
  trace.result = multiply(adj, trace.stripped_factor);
  return trace;
}

MonomialIdeal core(const MonomialIdeal& a) {
  require_complete_for_core(a);
  return product(a, adjoint(a));
}

MonomialIdeal adjoint_power(const MonomialIdeal& a, std::int64_t n) {
  if (n < 1) throw DomainError("adjoint power requires n >= 1");
  require_complete_for_core(a);
  MonomialIdeal direct = adjoint(power(a, n));
  MonomialIdeal factored = product(power(a, n - 1), adjoint(a));
  check_internal(direct == factored,
                 "adjoint of a power disagrees with its factored form");
  return direct;
}

MonomialIdeal adj_product(const MonomialIdeal& a, const MonomialIdeal& b,
                          std::int64_t r, std::int64_t s) {
  if (r < 1 || s < 1) throw DomainError("adjoint product requires r, s >= 1");
  require_complete_for_core(a);
  require_complete_for_core(b);
  MonomialIdeal ar = power(a, r);
  MonomialIdeal bs = power(b, s);
  MonomialIdeal direct = adjoint(product(ar, bs));
  MonomialIdeal split =
      sum(product(ar, adjoint(bs)), product(bs, adjoint(ar)));
  check_internal(direct == split,
                 "adjoint of a product disagrees with its split form");
  return direct;
}

MonomialIdeal core_product(const MonomialIdeal& a, const MonomialIdeal& b,
                           std::int64_t r, std::int64_t s) {
  if (r < 1 || s < 1) throw DomainError("core product requires r, s >= 1");
  require_complete_for_core(a);
  require_complete_for_core(b);
  MonomialIdeal ar = power(a, r);
  MonomialIdeal bs = power(b, s);
  MonomialIdeal direct = core(product(ar, bs));
  MonomialIdeal split = sum(product(power(a, 2 * r), core(bs)),
                            product(core(ar), power(b, 2 * s)));
  check_internal(direct == split,
                 "core of a product disagrees with its split form");
  return direct;
}

}  // namespace ideal2d
