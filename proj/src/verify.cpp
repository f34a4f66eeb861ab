#include "ideal2d/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ideal2d/adjoint.hpp"
#include "ideal2d/errors.hpp"
#include "ideal2d/newton.hpp"
#include "ideal2d/transforms.hpp"

namespace ideal2d {
namespace {

using Params = std::map<std::string, std::int64_t>;
using Sides = std::pair<std::string, std::string>;

/// Runs one claim evaluation, timing it and recording both rendered sides.
class Recorder {
 public:
  Recorder(std::vector<VerificationReport>& out, Params extra)
      : out_(&out), extra_(std::move(extra)) {}

  template <typename F>
  void add(std::string claim_id, Params params, F&& eval) {
    const auto start = std::chrono::steady_clock::now();
    Sides sides = eval();
    const auto stop = std::chrono::steady_clock::now();
    VerificationReport report;
    report.claim_id = std::move(claim_id);
    report.params = std::move(params);
    report.params.insert(extra_.begin(), extra_.end());
    report.lhs = std::move(sides.first);
    report.rhs = std::move(sides.second);
    report.passed = report.lhs == report.rhs;
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            stop - start)
                            .count();
    out_->push_back(std::move(report));
  }

 private:
  std::vector<VerificationReport>* out_;
  Params extra_;
};

std::string dec(const Int& v) { return v.get_str(); }

Sides scalar_sides(const Int& lhs, const Int& rhs) {
  return {dec(lhs), dec(rhs)};
}

Sides ideal_sides(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  return {lhs.to_string(), rhs.to_string()};
}

/// Encodes the claim `part` is contained in `whole` as the ideal equality
/// part + whole = whole.
Sides containment_sides(const MonomialIdeal& part, const MonomialIdeal& whole) {
  return {sum(part, whole).to_string(), whole.to_string()};
}

/// Encodes equality of a polynomial ideal and a monomial ideal as a bundle
/// of the certified colength and the two containment directions.
Sides poly_vs_monomial_sides(const PolynomialIdeal& p, const MonomialIdeal& m,
                             std::int64_t cap) {
  std::string rhs = "lambda=" + dec(m.colength()) + ";sub=1;sup=1";
  std::string lhs;
  try {
    const TruncationCertificate cert = certify_m_primary(p, cap);
    bool sub = true;
    for (const LocalPolynomial& g : p.generators()) {
      if (!g.in_monomial_ideal(m)) {
        sub = false;
        break;
      }
    }
    bool sup = true;
    for (const Exponent& g : m.generators()) {
      if (!cert.contains(LocalPolynomial::monomial(g))) {
        sup = false;
        break;
      }
    }
    lhs = "lambda=" + dec(cert.colength()) + ";sub=" + (sub ? "1" : "0") +
          ";sup=" + (sup ? "1" : "0");
  } catch (const LimitError& err) {
    lhs = std::string("error: ") + err.what();
  }
  return {lhs, rhs};
}

/// Encodes the claim that the parameter pair (a, b) has multiplicity
/// `target`; a certification failure is reported on the left side.
Sides certified_multiplicity_sides(const LocalPolynomial& a,
                                   const LocalPolynomial& b, const Int& target,
                                   std::int64_t cap) {
  std::string lhs;
  try {
    lhs = dec(pair_multiplicity(a, b, cap));
  } catch (const LimitError& err) {
    lhs = std::string("error: ") + err.what();
  }
  return {lhs, dec(target)};
}

void require_complete_input(const MonomialIdeal& a) {
  if (a.is_unit() || !a.is_m_primary() || !is_complete(a))
    throw DomainError("suite requires a complete m-primary ideal");
}

void require_power_bounds(std::int64_t r_max, std::int64_t s_max) {
  if (r_max < 1 || s_max < 1)
    throw DomainError("power bounds must be at least 1");
}

/// Memoized powers of a fixed base ideal, adjoints of those powers, and the
/// cores computed from them.
class PowerCache {
 public:
  explicit PowerCache(const MonomialIdeal& base) : base_(base) {}

  const MonomialIdeal& pow(std::int64_t n) {
    while (static_cast<std::int64_t>(pows_.size()) <= n)
      pows_.push_back(product(pows_.back(), base_));
    return pows_[static_cast<std::size_t>(n)];
  }

  const MonomialIdeal& adj(std::int64_t n) {
    auto it = adj_.find(n);
    if (it == adj_.end()) it = adj_.emplace(n, adjoint(pow(n))).first;
    return it->second;
  }

  const MonomialIdeal& core_pow(std::int64_t n) {
    auto it = core_.find(n);
    if (it == core_.end()) it = core_.emplace(n, product(pow(n), adj(n))).first;
    return it->second;
  }

 private:
  MonomialIdeal base_;
  std::vector<MonomialIdeal> pows_{MonomialIdeal::unit()};
  std::map<std::int64_t, MonomialIdeal> adj_;
  std::map<std::int64_t, MonomialIdeal> core_;
};

/// Memoized mixed powers I^r J^s with their adjoints and cores.
class PairCache {
 public:
  PairCache(const MonomialIdeal& i, const MonomialIdeal& j)
      : left_(i), right_(j) {}

  PowerCache& left() { return left_; }
  PowerCache& right() { return right_; }

  const MonomialIdeal& prod(std::int64_t r, std::int64_t s) {
    return lookup(prod_, r, s,
                  [&] { return product(left_.pow(r), right_.pow(s)); });
  }

  const MonomialIdeal& adj_prod(std::int64_t r, std::int64_t s) {
    return lookup(adj_, r, s, [&] { return adjoint(prod(r, s)); });
  }

  const MonomialIdeal& core_prod(std::int64_t r, std::int64_t s) {
    return lookup(core_, r, s,
                  [&] { return product(prod(r, s), adj_prod(r, s)); });
  }

 private:
  using Memo = std::map<std::pair<std::int64_t, std::int64_t>, MonomialIdeal>;

  template <typename F>
  const MonomialIdeal& lookup(Memo& memo, std::int64_t r, std::int64_t s,
                              F&& make) {
    const auto key = std::make_pair(r, s);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, make()).first;
    return it->second;
  }

  PowerCache left_;
  PowerCache right_;
  Memo prod_;
  Memo adj_;
  Memo core_;
};

/// Sum of (scale * o + shift)^2 over the point-basis orders.
Int sum_square(const std::vector<std::int64_t>& orders, std::int64_t scale,
               std::int64_t shift) {
  Int total = 0;
  for (std::int64_t o : orders) {
    const Int term = Int(scale) * o + shift;
    total += term * term;
  }
  return total;
}

/// Sum of r*o*(s*o - 1) over the point-basis orders.
Int sum_mixed(const std::vector<std::int64_t>& orders, std::int64_t r,
              std::int64_t s) {
  Int total = 0;
  for (std::int64_t o : orders) total += Int(r) * o * (Int(s) * o - 1);
  return total;
}

/// The integer identity r^2 n^2 - rn = 2 r^2 C(n+1,2) - 2 C(r+1,2) n on a
/// fixed grid; input-independent, so suites emit it at most once.
void emit_binomial_grid(Recorder& rec) {
  for (std::int64_t r = 0; r <= 20; ++r) {
    for (std::int64_t n = 0; n <= 20; ++n) {
      rec.add("sec4.binomial_identity", {{"r", r}, {"n", n}},
              [&]() -> Sides {
                const Int lhs = Int(r) * r * n * n - Int(n) * r;
                const Int rhs = 2 * Int(r) * r * choose2(Int(n + 1)) -
                                2 * choose2(Int(r + 1)) * n;
                return scalar_sides(lhs, rhs);
              });
    }
  }
}

LocalPolynomial mono(const Exponent& e) { return LocalPolynomial::monomial(e); }

/// Random combination of the minimal generators with coefficients in 1..9,
/// deterministic in (seed, pair_index, attempt, which).
LocalPolynomial random_combination(const MonomialIdeal& a, std::uint64_t seed,
                                   std::int64_t pair_index, int attempt,
                                   int which) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull +
                      (static_cast<std::uint64_t>(pair_index) << 16) +
                      (static_cast<std::uint64_t>(attempt) << 8) +
                      static_cast<std::uint64_t>(which));
  LocalPolynomial f;
  for (const Exponent& g : a.generators()) {
    const std::int64_t coeff = 1 + static_cast<std::int64_t>(rng() % 9);
    f = f + LocalPolynomial::monomial(g, Rat(coeff));
  }
  return f;
}

}  // namespace

VerificationReport verify_hd(const MonomialIdeal& a) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim_id = "hd.reconciliation";
  report.lhs = "lambda=" + dec(pb_colength(a)) + ";e=" + dec(pb_multiplicity(a)) +
               ";e1=" + dec(pb_e1(a));
  const Int colength = a.colength();
  const Int mult = multiplicity(a);
  report.rhs = "lambda=" + dec(colength) + ";e=" + dec(mult) +
               ";e1=" + dec(mult - colength);
  report.passed = report.lhs == report.rhs;
  const auto stop = std::chrono::steady_clock::now();
  report.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  return report;
}

std::vector<VerificationReport> verify_sec3(const MonomialIdeal& i,
                                            const MonomialIdeal& j,
                                            const PairSuiteOptions& options) {
  require_complete_input(i);
  require_complete_input(j);
  require_power_bounds(options.r_max, options.s_max);

  std::vector<VerificationReport> out;
  Recorder rec(out, options.extra_params);
  PairCache cache(i, j);
  const Int e1 = mixed_e1(i, j);

  struct PerIdeal {
    std::int64_t which;
    PowerCache* powers;
    Int e;
    Int l;
    std::int64_t n_max;
  };
  PerIdeal sides[2] = {
      {1, &cache.left(), multiplicity(i), i.colength(), options.r_max},
      {2, &cache.right(), multiplicity(j), j.colength(), options.s_max},
  };

  for (PerIdeal& side : sides) {
    for (std::int64_t n = 1; n <= side.n_max; ++n) {
      rec.add("sec3.adjoint_power_colength", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                const Int rhs = side.e * choose2(Int(n + 1)) - side.l * n;
                return scalar_sides(side.powers->adj(n).colength(), rhs);
              });
      rec.add("sec3.adjoint_power_factor", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                return ideal_sides(
                    side.powers->adj(n + 1),
                    product(side.powers->pow(n), side.powers->adj(1)));
              });
    }
  }

  rec.add("sec3.adjoint_factor_containment", {{"direction", 1}},
          [&]() -> Sides {
            return containment_sides(product(j, cache.left().adj(1)),
                                     cache.adj_prod(1, 1));
          });
  rec.add("sec3.adjoint_factor_containment", {{"direction", 2}},
          [&]() -> Sides {
            return containment_sides(product(i, cache.right().adj(1)),
                                     cache.adj_prod(1, 1));
          });
  rec.add("sec3.adjoint_subadditivity", {}, [&]() -> Sides {
    return containment_sides(
        cache.adj_prod(1, 1),
        product(cache.left().adj(1), cache.right().adj(1)));
  });

  for (std::int64_t r = 1; r <= options.r_max; ++r) {
    for (std::int64_t s = 1; s <= options.s_max; ++s) {
      rec.add("sec3.adjoint_product_colength", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const Int rhs = e1 * r * s + cache.left().adj(r).colength() +
                                cache.right().adj(s).colength();
                return scalar_sides(cache.adj_prod(r, s).colength(), rhs);
              });
      rec.add("sec3.adjoint_product_split", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const MonomialIdeal split =
                    sum(product(cache.left().pow(r), cache.right().adj(s)),
                        product(cache.right().pow(s), cache.left().adj(r)));
                return ideal_sides(cache.adj_prod(r, s), split);
              });
    }
  }

  if (options.elements) {
    const LocalPolynomial& a = options.elements->first;
    const LocalPolynomial& b = options.elements->second;
    if (!a.in_monomial_ideal(i) || !b.in_monomial_ideal(j))
      throw DomainError("not contained in the ideal");

    bool certified = false;
    rec.add("sec3.joint_reduction_certificate", {}, [&]() -> Sides {
      Sides sides_ = certified_multiplicity_sides(a, b, e1, options.cap);
      certified = sides_.first == sides_.second;
      return sides_;
    });

    if (certified) {
      const std::int64_t er = std::min<std::int64_t>(options.r_max, 2);
      const std::int64_t es = std::min<std::int64_t>(options.s_max, 2);
      for (std::int64_t r = 1; r <= er; ++r) {
        for (std::int64_t s = 1; s <= es; ++s) {
          rec.add("sec3.adjoint_product_split_elements", {{"r", r}, {"s", s}},
                  [&]() -> Sides {
                    std::vector<LocalPolynomial> gens;
                    const LocalPolynomial ar = LocalPolynomial::pow(a, r);
                    const LocalPolynomial bs = LocalPolynomial::pow(b, s);
                    for (const Exponent& g : cache.right().adj(s).generators())
                      gens.push_back(ar * mono(g));
                    for (const Exponent& g : cache.left().adj(r).generators())
                      gens.push_back(bs * mono(g));
                    return poly_vs_monomial_sides(
                        PolynomialIdeal(std::move(gens)), cache.adj_prod(r, s),
                        options.cap);
                  });
        }
      }
      if (i == j) {
        for (std::int64_t n = 1; n <= er; ++n) {
          rec.add("sec3.adjoint_power_factor_elements", {{"n", n}},
                  [&]() -> Sides {
                    std::vector<LocalPolynomial> gens;
                    for (const Exponent& g : cache.left().adj(n).generators()) {
                      gens.push_back(a * mono(g));
                      gens.push_back(b * mono(g));
                    }
                    return poly_vs_monomial_sides(
                        PolynomialIdeal(std::move(gens)),
                        cache.left().adj(n + 1), options.cap);
                  });
        }
      }
    }
  }
  sort_reports(out);
  return out;
}

std::vector<VerificationReport> verify_sec4(const MonomialIdeal& i,
                                            const MonomialIdeal& j,
                                            const PairSuiteOptions& options) {
  require_complete_input(i);
  require_complete_input(j);
  require_power_bounds(options.r_max, options.s_max);

  std::vector<VerificationReport> out;
  Recorder rec(out, options.extra_params);
  PairCache cache(i, j);
  const Int e1 = mixed_e1(i, j);

  struct PerIdeal {
    std::int64_t which;
    PowerCache* powers;
    Int e;
    Int l;
    std::vector<std::int64_t> orders;
    std::int64_t n_max;
  };
  PerIdeal sides[2] = {
      {1, &cache.left(), multiplicity(i), i.colength(), point_basis_orders(i),
       options.r_max},
      {2, &cache.right(), multiplicity(j), j.colength(),
       point_basis_orders(j), options.s_max},
  };

  for (PerIdeal& side : sides) {
    for (std::int64_t n = 1; n <= side.n_max; ++n) {
      rec.add("sec4.multiplicity_power", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                return scalar_sides(multiplicity(side.powers->pow(n)),
                                    sum_square(side.orders, n, 0));
              });
      rec.add("sec4.adjoint_multiplicity", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                return scalar_sides(multiplicity(side.powers->adj(n)),
                                    sum_square(side.orders, n, -1));
              });
      rec.add("sec4.core_power_colength", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                const Int rhs = 4 * side.e * choose2(Int(n + 1)) -
                                (side.e + 2 * side.l) * n;
                return scalar_sides(side.powers->core_pow(n).colength(), rhs);
              });
      rec.add("sec4.core_colength_additivity",
              {{"ideal", side.which}, {"n", n}}, [&]() -> Sides {
                const Int rhs =
                    mixed_e1(side.powers->pow(n), side.powers->adj(n)) +
                    side.powers->pow(n).colength() +
                    side.powers->adj(n).colength();
                return scalar_sides(side.powers->core_pow(n).colength(), rhs);
              });
      rec.add("sec4.core_power_via_adjoint", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                return ideal_sides(
                    side.powers->core_pow(n),
                    product(side.powers->pow(2 * n - 1), side.powers->adj(1)));
              });
      rec.add("sec4.core_power_as_double_adjoint",
              {{"ideal", side.which}, {"n", n}}, [&]() -> Sides {
                return ideal_sides(side.powers->core_pow(n),
                                   side.powers->adj(2 * n));
              });
      rec.add("sec4.core_power_recursion", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                return ideal_sides(
                    side.powers->core_pow(n + 1),
                    product(side.powers->pow(2), side.powers->core_pow(n)));
              });
    }
    for (std::int64_t r = 1; r <= options.r_max; ++r) {
      for (std::int64_t s = 1; s <= options.s_max; ++s) {
        rec.add("sec4.power_adjoint_multiplicity",
                {{"ideal", side.which}, {"r", r}, {"s", s}}, [&]() -> Sides {
                  const MonomialIdeal mixed =
                      product(side.powers->pow(r), side.powers->adj(s));
                  return scalar_sides(multiplicity(mixed),
                                      sum_square(side.orders, r + s, -1));
                });
        rec.add("sec4.power_adjoint_mixed_e1",
                {{"ideal", side.which}, {"r", r}, {"s", s}}, [&]() -> Sides {
                  return scalar_sides(
                      mixed_e1(side.powers->pow(r), side.powers->adj(s)),
                      sum_mixed(side.orders, r, s));
                });
      }
    }
  }

  if (options.include_integer_identity) emit_binomial_grid(rec);

  for (std::int64_t r = 1; r <= options.r_max; ++r) {
    for (std::int64_t s = 1; s <= options.s_max; ++s) {
      rec.add("sec4.core_product_colength", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const Int rhs = 4 * e1 * r * s +
                                cache.left().core_pow(r).colength() +
                                cache.right().core_pow(s).colength();
                return scalar_sides(cache.core_prod(r, s).colength(), rhs);
              });
      rec.add("sec4.core_product_split", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const MonomialIdeal split = sum(
                    product(cache.left().pow(2 * r), cache.right().core_pow(s)),
                    product(cache.left().core_pow(r),
                            cache.right().pow(2 * s)));
                return ideal_sides(cache.core_prod(r, s), split);
              });
    }
  }

  rec.add("sec4.core_factor_containment", {{"direction", 1}},
          [&]() -> Sides {
            return containment_sides(
                product(cache.right().pow(2), cache.left().core_pow(1)),
                cache.core_prod(1, 1));
          });
  rec.add("sec4.core_factor_containment", {{"direction", 2}},
          [&]() -> Sides {
            return containment_sides(
                product(cache.left().pow(2), cache.right().core_pow(1)),
                cache.core_prod(1, 1));
          });
  rec.add("sec4.core_subadditivity", {}, [&]() -> Sides {
    return containment_sides(
        cache.core_prod(1, 1),
        product(cache.left().core_pow(1), cache.right().core_pow(1)));
  });

  if (options.elements) {
    const LocalPolynomial& a = options.elements->first;
    const LocalPolynomial& b = options.elements->second;
    if (!a.in_monomial_ideal(i) || !b.in_monomial_ideal(j))
      throw DomainError("not contained in the ideal");

    bool certified = false;
    rec.add("sec4.joint_reduction_certificate", {}, [&]() -> Sides {
      Sides sides_ = certified_multiplicity_sides(a, b, e1, options.cap);
      certified = sides_.first == sides_.second;
      return sides_;
    });

    if (certified) {
      const std::int64_t er = std::min<std::int64_t>(options.r_max, 2);
      const std::int64_t es = std::min<std::int64_t>(options.s_max, 2);
      for (std::int64_t r = 1; r <= er; ++r) {
        for (std::int64_t s = 1; s <= es; ++s) {
          rec.add("sec4.core_product_split_elements", {{"r", r}, {"s", s}},
                  [&]() -> Sides {
                    std::vector<LocalPolynomial> gens;
                    const LocalPolynomial a2r = LocalPolynomial::pow(a, 2 * r);
                    const LocalPolynomial b2s = LocalPolynomial::pow(b, 2 * s);
                    for (const Exponent& g :
                         cache.right().core_pow(s).generators())
                      gens.push_back(a2r * mono(g));
                    for (const Exponent& g :
                         cache.left().core_pow(r).generators())
                      gens.push_back(b2s * mono(g));
                    return poly_vs_monomial_sides(
                        PolynomialIdeal(std::move(gens)),
                        cache.core_prod(r, s), options.cap);
                  });
        }
      }
      if (i == j) {
        for (std::int64_t n = 1; n <= er; ++n) {
          rec.add("sec4.core_power_recursion_elements", {{"n", n}},
                  [&]() -> Sides {
                    std::vector<LocalPolynomial> gens;
                    const LocalPolynomial a2 = a * a;
                    const LocalPolynomial b2 = b * b;
                    for (const Exponent& g :
                         cache.left().core_pow(n).generators()) {
                      gens.push_back(a2 * mono(g));
                      gens.push_back(b2 * mono(g));
                    }
                    return poly_vs_monomial_sides(
                        PolynomialIdeal(std::move(gens)),
                        cache.left().core_pow(n + 1), options.cap);
                  });
        }
      }
    }
  }
  sort_reports(out);
  return out;
}

std::vector<VerificationReport> verify_ex51(std::int64_t r_max,
                                            std::int64_t s_max,
                                            std::int64_t n_max,
                                            std::int64_t cap) {
  require_power_bounds(r_max, s_max);
  require_power_bounds(n_max, 1);

  const MonomialIdeal ideal_i({{2, 0}, {1, 1}, {0, 3}});
  const MonomialIdeal ideal_k({{3, 0}, {1, 1}, {0, 2}});
  const MonomialIdeal m = m_power(1);
  const MonomialIdeal m3 = m_power(3);

  std::vector<VerificationReport> out;
  Recorder rec(out, {});
  PairCache cache(ideal_i, ideal_k);

  struct PerIdeal {
    std::int64_t which;
    const MonomialIdeal* ideal;
    PowerCache* powers;
  };
  PerIdeal sides[2] = {
      {1, &ideal_i, &cache.left()},
      {2, &ideal_k, &cache.right()},
  };

  for (PerIdeal& side : sides) {
    rec.add("ex51.colength", {{"ideal", side.which}}, [&]() -> Sides {
      return scalar_sides(side.ideal->colength(), 4);
    });
    rec.add("ex51.multiplicity", {{"ideal", side.which}}, [&]() -> Sides {
      return scalar_sides(multiplicity(*side.ideal), 5);
    });
    rec.add("ex51.point_basis_orders", {{"ideal", side.which}},
            [&]() -> Sides {
              std::string lhs;
              for (std::int64_t o : point_basis_orders(*side.ideal)) {
                if (!lhs.empty()) lhs += ",";
                lhs += std::to_string(o);
              }
              return {lhs, "2,1"};
            });
    for (std::int64_t n = 1; n <= n_max; ++n) {
      rec.add("ex51.adjoint_power_ideal", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                return ideal_sides(side.powers->adj(n),
                                   product(m, side.powers->pow(n - 1)));
              });
      rec.add("ex51.adjoint_power_colength",
              {{"ideal", side.which}, {"n", n}}, [&]() -> Sides {
                const Int rhs = 5 * choose2(Int(n + 1)) - 4 * Int(n);
                return scalar_sides(side.powers->adj(n).colength(), rhs);
              });
    }
  }

  rec.add("ex51.mixed_e1", {}, [&]() -> Sides {
    return scalar_sides(mixed_e1(ideal_i, ideal_k), 4);
  });

  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (std::int64_t s = 1; s <= s_max; ++s) {
      rec.add("ex51.adjoint_product_ideal", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                return ideal_sides(cache.adj_prod(r, s),
                                   product(m3, cache.prod(r - 1, s - 1)));
              });
      rec.add("ex51.adjoint_product_colength", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const Int rhs = 5 * choose2(Int(r + 1)) + 4 * Int(r) * s +
                                5 * choose2(Int(s + 1)) - 4 * Int(r) -
                                4 * Int(s);
                return scalar_sides(cache.adj_prod(r, s).colength(), rhs);
              });
      rec.add("ex51.core_product_ideal", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                return ideal_sides(
                    cache.core_prod(r, s),
                    product(m3, cache.prod(2 * r - 1, 2 * s - 1)));
              });
      rec.add("ex51.core_product_colength", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const Int rhs = 20 * choose2(Int(r + 1)) + 16 * Int(r) * s +
                                20 * choose2(Int(s + 1)) - 13 * Int(r) -
                                13 * Int(s);
                return scalar_sides(cache.core_prod(r, s).colength(), rhs);
              });
    }
  }

  const LocalPolynomial x = mono({1, 0});
  const LocalPolynomial y = mono({0, 1});
  const LocalPolynomial xy = mono({1, 1});
  const LocalPolynomial f = mono({2, 0}) + mono({0, 3});
  const LocalPolynomial g = mono({0, 2}) + mono({3, 0});

  rec.add("ex51.joint_reduction_certificate", {}, [&]() -> Sides {
    return certified_multiplicity_sides(mono({2, 0}), mono({0, 2}), 4, cap);
  });
  rec.add("ex51.reduction_certificate", {{"ideal", 1}}, [&]() -> Sides {
    return certified_multiplicity_sides(xy, f, 5, cap);
  });
  rec.add("ex51.reduction_certificate", {{"ideal", 2}}, [&]() -> Sides {
    return certified_multiplicity_sides(xy, g, 5, cap);
  });
  rec.add("ex51.reduction_multiplicity_split", {{"part", 1}},
          [&]() -> Sides {
            return certified_multiplicity_sides(x, f, 3, cap);
          });
  rec.add("ex51.reduction_multiplicity_split", {{"part", 2}},
          [&]() -> Sides {
            return certified_multiplicity_sides(y, f, 2, cap);
          });
  rec.add("ex51.reduction_multiplicity_additivity", {}, [&]() -> Sides {
    std::string lhs;
    std::string rhs;
    try {
      lhs = dec(pair_multiplicity(xy, f, cap));
    } catch (const LimitError& err) {
      lhs = std::string("error: ") + err.what();
    }
    try {
      rhs = dec(pair_multiplicity(x, f, cap) + pair_multiplicity(y, f, cap));
    } catch (const LimitError& err) {
      rhs = std::string("error: ") + err.what();
    }
    return {lhs, rhs};
  });
  sort_reports(out);
  return out;
}

std::vector<VerificationReport> verify_ex52(std::int64_t u, std::int64_t r_max,
                                            std::int64_t s_max,
                                            std::int64_t n_max,
                                            std::int64_t cap) {
  if (u < 3) throw DomainError("u must be at least 3");
  require_power_bounds(r_max, s_max);
  require_power_bounds(n_max, 1);

  const MonomialIdeal ideal_i({{u, 0}, {1, 1}, {0, u + 1}});
  const MonomialIdeal ideal_k({{u + 1, 0}, {1, 1}, {0, u}});
  const MonomialIdeal companion({{u, 0}, {1, 1}, {0, u}});
  const MonomialIdeal m = m_power(1);

  std::vector<VerificationReport> out;
  Recorder rec(out, {});
  PairCache cache(ideal_i, ideal_k);

  struct PerIdeal {
    std::int64_t which;
    const MonomialIdeal* ideal;
    PowerCache* powers;
  };
  PerIdeal sides[2] = {
      {1, &ideal_i, &cache.left()},
      {2, &ideal_k, &cache.right()},
  };

  std::string expected_orders = "2";
  for (std::int64_t t = 0; t < 2 * u - 3; ++t) expected_orders += ",1";

  for (PerIdeal& side : sides) {
    rec.add("ex52.colength", {{"ideal", side.which}}, [&]() -> Sides {
      return scalar_sides(side.ideal->colength(), 2 * Int(u));
    });
    rec.add("ex52.multiplicity", {{"ideal", side.which}}, [&]() -> Sides {
      return scalar_sides(multiplicity(*side.ideal), 2 * Int(u) + 1);
    });
    rec.add("ex52.point_basis_orders", {{"ideal", side.which}},
            [&]() -> Sides {
              std::string lhs;
              for (std::int64_t o : point_basis_orders(*side.ideal)) {
                if (!lhs.empty()) lhs += ",";
                lhs += std::to_string(o);
              }
              return {lhs, expected_orders};
            });
    for (std::int64_t n = 1; n <= n_max; ++n) {
      rec.add("ex52.adjoint_power_ideal", {{"ideal", side.which}, {"n", n}},
              [&]() -> Sides {
                return ideal_sides(side.powers->adj(n),
                                   product(m, side.powers->pow(n - 1)));
              });
      rec.add("ex52.adjoint_power_colength",
              {{"ideal", side.which}, {"n", n}}, [&]() -> Sides {
                const Int rhs =
                    (2 * Int(u) + 1) * choose2(Int(n + 1)) - 2 * Int(u) * n;
                return scalar_sides(side.powers->adj(n).colength(), rhs);
              });
    }
  }

  rec.add("ex52.intersection_form", {{"ideal", 1}}, [&]() -> Sides {
    const MonomialIdeal lhs = intersect(MonomialIdeal({{1, 0}, {0, u + 1}}),
                                        MonomialIdeal({{u, 0}, {0, 1}}));
    return ideal_sides(ideal_i, lhs);
  });
  rec.add("ex52.intersection_form", {{"ideal", 2}}, [&]() -> Sides {
    const MonomialIdeal lhs = intersect(MonomialIdeal({{1, 0}, {0, u}}),
                                        MonomialIdeal({{u + 1, 0}, {0, 1}}));
    return ideal_sides(ideal_k, lhs);
  });
  rec.add("ex52.companion_colength", {}, [&]() -> Sides {
    return scalar_sides(companion.colength(), 2 * Int(u) - 1);
  });
  rec.add("ex52.mixed_e1", {}, [&]() -> Sides {
    return scalar_sides(mixed_e1(ideal_i, ideal_k), 2 * Int(u));
  });
  rec.add("ex52.product_staircase", {}, [&]() -> Sides {
    const MonomialIdeal expected(
        {{2 * u + 1, 0}, {u + 1, 1}, {2, 2}, {1, u + 1}, {0, 2 * u + 1}});
    return ideal_sides(cache.prod(1, 1), expected);
  });
  rec.add("ex52.adjoint_product_base", {}, [&]() -> Sides {
    const MonomialIdeal expected({{u + 1, 0}, {2, 1}, {1, 2}, {0, u + 1}});
    return ideal_sides(cache.adj_prod(1, 1), expected);
  });

  for (std::int64_t r = 1; r <= r_max; ++r) {
    for (std::int64_t s = 1; s <= s_max; ++s) {
      rec.add("ex52.adjoint_product_ideal", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const MonomialIdeal expected =
                    product(product(m, cache.prod(r - 1, s - 1)), companion);
                return ideal_sides(cache.adj_prod(r, s), expected);
              });
      rec.add("ex52.adjoint_product_colength", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const Int rhs = (2 * Int(u) + 1) * choose2(Int(r + 1)) +
                                2 * Int(u) * r * s +
                                (2 * Int(u) + 1) * choose2(Int(s + 1)) -
                                2 * Int(u) * r - 2 * Int(u) * s;
                return scalar_sides(cache.adj_prod(r, s).colength(), rhs);
              });
      rec.add("ex52.core_product_ideal", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const MonomialIdeal expected = product(
                    product(m, cache.prod(2 * r - 1, 2 * s - 1)), companion);
                return ideal_sides(cache.core_prod(r, s), expected);
              });
      rec.add("ex52.core_product_colength", {{"r", r}, {"s", s}},
              [&]() -> Sides {
                const Int rhs = 4 * (2 * Int(u) + 1) * choose2(Int(r + 1)) +
                                8 * Int(u) * r * s +
                                4 * (2 * Int(u) + 1) * choose2(Int(s + 1)) -
                                (6 * Int(u) + 1) * r - (6 * Int(u) + 1) * s;
                return scalar_sides(cache.core_prod(r, s).colength(), rhs);
              });
    }
  }

  for (std::int64_t n = 2; n <= 8; ++n) {
    rec.add("ex52.kn_adjoint", {{"n", n}}, [&]() -> Sides {
      const MonomialIdeal kn({{2 * n - 3, 0}, {n - 2, 1}, {0, 2}});
      const MonomialIdeal expected({{n - 2, 0}, {0, 1}});
      return ideal_sides(adjoint(kn), expected);
    });
  }

  const LocalPolynomial xy = mono({1, 1});
  rec.add("ex52.joint_reduction_certificate", {}, [&]() -> Sides {
    const LocalPolynomial a = xy + mono({u, 0});
    const LocalPolynomial b = xy + mono({0, u});
    return certified_multiplicity_sides(a, b, 2 * Int(u), cap);
  });
  rec.add("ex52.reduction_certificate", {}, [&]() -> Sides {
    const LocalPolynomial a = mono({u, 0}) + mono({0, u + 1});
    return certified_multiplicity_sides(a, xy, 2 * Int(u) + 1, cap);
  });
  sort_reports(out);
  return out;
}

std::vector<VerificationReport> verify_corpus(const CorpusRunOptions& options) {
  if (options.pair_count < 0)
    throw DomainError("pair count must be non-negative");
  if (2 * options.pair_count > options.spec.count)
    throw DomainError("corpus too small for requested pairs");
  require_power_bounds(options.r_max, options.s_max);

  const std::vector<MonomialIdeal> ideals = random_complete_ideals(options.spec);

  std::vector<VerificationReport> out;
  Recorder rec(out, {});

  for (std::int64_t idx = 0; idx < options.spec.count; ++idx) {
    const MonomialIdeal& a = ideals[static_cast<std::size_t>(idx)];
    rec.add("corpus.hd_colength", {{"ideal", idx}}, [&]() -> Sides {
      return scalar_sides(pb_colength(a), a.colength());
    });
    rec.add("corpus.hd_multiplicity", {{"ideal", idx}}, [&]() -> Sides {
      return scalar_sides(pb_multiplicity(a), multiplicity(a));
    });
    rec.add("corpus.hd_e1", {{"ideal", idx}}, [&]() -> Sides {
      return scalar_sides(pb_e1(a), multiplicity(a) - a.colength());
    });
    rec.add("corpus.adjoint_oracle", {{"ideal", idx}}, [&]() -> Sides {
      return ideal_sides(adjoint(a), diagram_adjoint(a));
    });
    rec.add("corpus.briancon_skoda", {{"ideal", idx}}, [&]() -> Sides {
      return ideal_sides(adjoint(product(a, a)), product(a, adjoint(a)));
    });
    for (std::int64_t n = 1; n <= 2; ++n) {
      rec.add("corpus.power_min_gens", {{"ideal", idx}, {"n", n}},
              [&]() -> Sides {
                const Int count(
                    static_cast<unsigned long>(power(a, n).num_min_gens()));
                return scalar_sides(count, Int(n) * a.order() + 1);
              });
    }
  }

  emit_binomial_grid(rec);

  for (std::int64_t t = 0; t < options.pair_count; ++t) {
    const MonomialIdeal& i = ideals[static_cast<std::size_t>(2 * t)];
    const MonomialIdeal& j = ideals[static_cast<std::size_t>(2 * t + 1)];
    const Int e1 = mixed_e1(i, j);

    Recorder pair_rec(out, {{"pair", t}});
    pair_rec.add("corpus.hd_mixed_e1", {}, [&]() -> Sides {
      return scalar_sides(pb_mixed_e1(i, j), e1);
    });
    for (std::int64_t r = 1; r <= 2; ++r) {
      for (std::int64_t s = 1; s <= 2; ++s) {
        pair_rec.add("corpus.mixed_e1_bilinear", {{"r", r}, {"s", s}},
                     [&]() -> Sides {
                       return scalar_sides(mixed_e1(power(i, r), power(j, s)),
                                           e1 * r * s);
                     });
        pair_rec.add("corpus.colength_product", {{"r", r}, {"s", s}},
                     [&]() -> Sides {
                       const MonomialIdeal prod =
                           product(power(i, r), power(j, s));
                       const Int rhs = power(i, r).colength() +
                                       power(j, s).colength() + e1 * r * s;
                       return scalar_sides(prod.colength(), rhs);
                     });
        pair_rec.add("corpus.multiplicity_product", {{"r", r}, {"s", s}},
                     [&]() -> Sides {
                       const MonomialIdeal prod =
                           product(power(i, r), power(j, s));
                       const Int rhs = multiplicity(power(i, r)) +
                                       multiplicity(power(j, s)) +
                                       2 * e1 * r * s;
                       return scalar_sides(multiplicity(prod), rhs);
                     });
      }
    }

    PairSuiteOptions suite;
    suite.r_max = options.r_max;
    suite.s_max = options.s_max;
    suite.cap = options.cap;
    suite.include_integer_identity = false;
    suite.extra_params = {{"pair", t}};
    for (VerificationReport& report : verify_sec3(i, j, suite))
      out.push_back(std::move(report));
    for (VerificationReport& report : verify_sec4(i, j, suite))
      out.push_back(std::move(report));

    if (e1 <= options.certify_threshold) {
      std::optional<TruncationCertificate> cert;
      pair_rec.add("corpus.joint_reduction_certificate", {}, [&]() -> Sides {
        std::string lhs;
        for (int attempt = 0; attempt < 3; ++attempt) {
          const LocalPolynomial a =
              random_combination(i, options.spec.seed, t, attempt, 0);
          const LocalPolynomial b =
              random_combination(j, options.spec.seed, t, attempt, 1);
          try {
            TruncationCertificate candidate =
                certify_m_primary(PolynomialIdeal({a, b}), options.cap);
            lhs = dec(candidate.colength());
            if (candidate.colength() == e1) {
              cert = std::move(candidate);
              break;
            }
          } catch (const LimitError& err) {
            lhs = std::string("error: ") + err.what();
            break;
          }
        }
        return {lhs, dec(e1)};
      });
      if (cert) {
        pair_rec.add("corpus.rees_sally", {}, [&]() -> Sides {
          const MonomialIdeal prod = product(i, j);
          std::size_t inside = 0;
          for (const Exponent& g : prod.generators())
            if (cert->contains(mono(g))) ++inside;
          const std::string total = std::to_string(prod.num_min_gens());
          return {std::to_string(inside) + "/" + total, total + "/" + total};
        });
      }
    }
  }

  sort_reports(out);
  return out;
}

}  // namespace ideal2d
