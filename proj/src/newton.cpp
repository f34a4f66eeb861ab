#include "ideal2d/newton.hpp"

#include <algorithm>

namespace ideal2d {

namespace {

void require_m_primary(const MonomialIdeal& a, const char* what) {
  if (!a.is_m_primary()) throw DomainError(what);
}

std::int64_t cross(const Exponent& o, const Exponent& p, const Exponent& q) {
  return (p.i - o.i) * (q.j - o.j) - (p.j - o.j) * (q.i - o.i);
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  check_internal(den > 0, "floor_div needs a positive denominator");
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return -floor_div(-num, den);
}

}  // namespace

NewtonDiagram newton_diagram(const MonomialIdeal& a) {
  require_m_primary(a, "Newton diagram requires an m-primary ideal");
  // Lower convex hull of the generators, walked by increasing i. Generators
  // are stored by decreasing i, so scan them in reverse; collinear points are
  // dropped.
  std::vector<Exponent> hull;
  const auto& gens = a.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  std::reverse(hull.begin(), hull.end());
  return NewtonDiagram{std::move(hull)};
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  if (!a.is_m_primary()) {
    throw DomainError("integral closure requires an m-primary ideal");
  }
  NewtonDiagram nd = newton_diagram(a);
  const auto& v = nd.vertices;
  std::vector<Exponent> points;
  // Walk the boundary edge by edge and take, for every column i, the least
  // j on or above the edge.
  points.push_back(v.front());
  for (std::size_t t = 1; t < v.size(); ++t) {
    const Exponent& p = v[t - 1];
    const Exponent& q = v[t];
    for (std::int64_t i = q.i; i < p.i; ++i) {
      std::int64_t j =
          ceil_div(p.j * (i - q.i) + q.j * (p.i - i), p.i - q.i);
      points.push_back({i, j});
    }
  }
  return MonomialIdeal(std::move(points));
}

bool is_complete(const MonomialIdeal& a) { return a == integral_closure(a); }

Rat covolume(const MonomialIdeal& a) {
  NewtonDiagram nd = newton_diagram(a);
  // Shoelace formula over the closed polygon (0,0), (A,0), ..., (0,B).
  std::vector<Exponent> poly;
  poly.push_back({0, 0});
  poly.insert(poly.end(), nd.vertices.begin(), nd.vertices.end());
  Int twice_area = 0;
  for (std::size_t t = 0; t < poly.size(); ++t) {
    const Exponent& p = poly[t];
    const Exponent& q = poly[(t + 1) % poly.size()];
    twice_area += Int(p.i) * Int(q.j) - Int(p.j) * Int(q.i);
  }
  twice_area = abs(twice_area);
  Rat area(twice_area, 2);
  area.canonicalize();
  return area;
}

Int multiplicity(const MonomialIdeal& a) {
  Rat twice = 2 * covolume(a);
  check_internal(twice.get_den() == 1, "multiplicity is not an integer");
  return twice.get_num();
}

Int mixed_e1(const MonomialIdeal& a, const MonomialIdeal& b) {
  Int e = multiplicity(product(a, b)) - multiplicity(a) - multiplicity(b);
  check_internal(e % 2 == 0, "mixed multiplicity has odd parity");
  Int half = e / 2;
  check_internal(half >= 0, "negative mixed multiplicity");
  return half;
}

MonomialIdeal diagram_adjoint(const MonomialIdeal& a) {
  NewtonDiagram nd = newton_diagram(a);
  const auto& v = nd.vertices;
  if (v.size() == 1) return MonomialIdeal::unit();

  // Each edge (p, q) with p.i > q.i has inward normal n = (q.j - p.j,
  // p.i - q.i), both entries positive, and offset c = n . p. The monomial
  // x^s y^t is in the adjoint iff (s+1, t+1) is strictly on the inner side
  // of every edge line.
  struct Edge {
    std::int64_t nx, ny, c;
  };
  std::vector<Edge> edges;
  for (std::size_t t = 1; t < v.size(); ++t) {
    const Exponent& p = v[t - 1];
    const Exponent& q = v[t];
    Edge e{q.j - p.j, p.i - q.i, 0};
    e.c = e.nx * p.i + e.ny * p.j;
    edges.push_back(e);
  }

  std::int64_t max_i = v.front().i;
  std::vector<Exponent> points;
  for (std::int64_t s = 0; s <= max_i; ++s) {
    std::int64_t t_min = 0;
    for (const Edge& e : edges) {
      // Strictness: ny*(t+1) > c - nx*(s+1), i.e. t >= floor((c - nx*(s+1)) / ny).
      std::int64_t bound = floor_div(e.c - e.nx * (s + 1), e.ny);
      t_min = std::max(t_min, bound);
    }
    points.push_back({s, t_min});
    if (t_min == 0) break;
  }
  check_internal(points.back().j == 0,
                 "adjoint column scan ended before reaching the i axis");
  return MonomialIdeal(std::move(points));
}

}  // namespace ideal2d
