#include "ideal2d/staircase.hpp"

#include <algorithm>

namespace ideal2d {

MonomialIdeal::MonomialIdeal(std::vector<Exponent> raw) {
  if (raw.empty()) throw DomainError("empty generating set");
  for (const Exponent& e : raw) {
    check_internal(e.i >= 0 && e.j >= 0, "negative exponent in generator");
  }
  std::sort(raw.begin(), raw.end(), [](const Exponent& a, const Exponent& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::vector<Exponent> kept;
  std::int64_t best_j = -1;
  for (const Exponent& e : raw) {
    // Scanning by increasing i: a generator survives iff its j is strictly
    // below the j of every generator with smaller or equal i.
    if (best_j < 0 || e.j < best_j) {
      kept.push_back(e);
      best_j = e.j;
    }
  }
  std::reverse(kept.begin(), kept.end());
  gens_ = std::move(kept);
}

MonomialIdeal MonomialIdeal::unit() { return MonomialIdeal({{0, 0}}); }

MonomialIdeal MonomialIdeal::principal(const Exponent& e) {
  return MonomialIdeal({e});
}

bool MonomialIdeal::contains(const Exponent& e) const {
  // First generator with g.i <= e.i; generators are sorted by decreasing i.
  auto it = std::lower_bound(
      gens_.begin(), gens_.end(), e.i,
      [](const Exponent& g, std::int64_t i) { return g.i > i; });
  return it != gens_.end() && it->j <= e.j;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const Exponent& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0] == Exponent{0, 0};
}

bool MonomialIdeal::is_m_primary() const {
  return gens_.front().j == 0 && gens_.back().i == 0;
}

std::int64_t MonomialIdeal::order() const {
  std::int64_t best = gens_.front().degree();
  for (const Exponent& g : gens_) best = std::min(best, g.degree());
  return best;
}

std::int64_t MonomialIdeal::pure_x_exponent() const {
  check_internal(is_m_primary(), "pure_x_exponent of a non-m-primary ideal");
  return gens_.front().i;
}

std::int64_t MonomialIdeal::pure_y_exponent() const {
  check_internal(is_m_primary(), "pure_y_exponent of a non-m-primary ideal");
  return gens_.back().j;
}

Int MonomialIdeal::colength() const {
  if (!is_m_primary()) throw DomainError("infinite colength");
  // Sum the heights of the staircase columns between consecutive generators.
  Int total = 0;
  for (std::size_t t = 1; t < gens_.size(); ++t) {
    total += Int(gens_[t].j) * Int(gens_[t - 1].i - gens_[t].i);
  }
  return total;
}

Exponent MonomialIdeal::gcd_exponent() const {
  Exponent g = gens_.front();
  for (const Exponent& e : gens_) {
    g.i = std::min(g.i, e.i);
    g.j = std::min(g.j, e.j);
  }
  return g;
}

std::string MonomialIdeal::to_string() const {
  auto monomial = [](const Exponent& e) -> std::string {
    if (e.i == 0 && e.j == 0) return "1";
    std::string s;
    if (e.i > 0) {
      s += "x";
      if (e.i > 1) s += "^" + std::to_string(e.i);
    }
    if (e.j > 0) {
      if (!s.empty()) s += "*";
      s += "y";
      if (e.j > 1) s += "^" + std::to_string(e.j);
    }
    return s;
  };
  std::string out;
  for (const Exponent& g : gens_) {
    if (!out.empty()) out += ",";
    out += monomial(g);
  }
  return out;
}

MonomialIdeal minimalize(std::vector<Exponent> raw) {
  return MonomialIdeal(std::move(raw));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exponent> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exponent> gens;
  gens.reserve(a.num_min_gens() * b.num_min_gens());
  for (const Exponent& p : a.generators()) {
    for (const Exponent& q : b.generators()) {
      gens.push_back(p + q);
    }
  }
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t n) {
  check_internal(n >= 0, "negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit();
  for (std::int64_t t = 0; t < n; ++t) result = product(result, a);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exponent> gens;
  gens.reserve(a.num_min_gens() * b.num_min_gens());
  for (const Exponent& p : a.generators()) {
    for (const Exponent& q : b.generators()) {
      gens.push_back({std::max(p.i, q.i), std::max(p.j, q.j)});
    }
  }
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  // (a : b) is the intersection over generators g of b of the translates
  // of a by -g, clipped to the first quadrant.
  bool first = true;
  MonomialIdeal result = MonomialIdeal::unit();
  for (const Exponent& g : b.generators()) {
    std::vector<Exponent> shifted;
    shifted.reserve(a.num_min_gens());
    for (const Exponent& p : a.generators()) {
      shifted.push_back({std::max<std::int64_t>(p.i - g.i, 0),
                         std::max<std::int64_t>(p.j - g.j, 0)});
    }
    MonomialIdeal part(std::move(shifted));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal multiply(const MonomialIdeal& a, const Exponent& e) {
  std::vector<Exponent> gens;
  gens.reserve(a.num_min_gens());
  for (const Exponent& p : a.generators()) gens.push_back(p + e);
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal m_power(std::int64_t n) {
  check_internal(n >= 0, "negative power of the maximal ideal");
  std::vector<Exponent> gens;
  for (std::int64_t i = 0; i <= n; ++i) gens.push_back({n - i, i});
  return MonomialIdeal(std::move(gens));
}

Int choose2(const Int& n) { return n * (n - 1) / 2; }

}  // namespace ideal2d
