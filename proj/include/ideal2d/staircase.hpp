// Exact staircase arithmetic for monomial ideals in k[[x, y]].
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ideal2d/errors.hpp"

namespace ideal2d {

/// Arbitrary-precision integer used for all derived quantities
/// (colengths, multiplicities, formula evaluations).
using Int = mpz_class;

/// Exact rational, used for areas and for linear algebra over the ground field.
using Rat = mpq_class;

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Exponent {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;

  /// True when x^i y^j divides x^(e.i) y^(e.j).
  bool divides(const Exponent& e) const { return i <= e.i && j <= e.j; }

  Exponent operator+(const Exponent& o) const { return {i + o.i, j + o.j}; }

  std::int64_t degree() const { return i + j; }
};

/// A nonzero monomial ideal, stored as its antichain of minimal generators
/// sorted by strictly decreasing i (equivalently strictly increasing j).
class MonomialIdeal {
 public:
  /// Builds the ideal generated by `raw`, discarding redundant generators.
  /// Throws DomainError("empty generating set") when `raw` is empty.
  explicit MonomialIdeal(std::vector<Exponent> raw);

  /// The unit ideal (1) = R.
  static MonomialIdeal unit();

  /// The principal ideal (x^(e.i) y^(e.j)).
  static MonomialIdeal principal(const Exponent& e);

  const std::vector<Exponent>& generators() const { return gens_; }

  std::size_t num_min_gens() const { return gens_.size(); }

  /// Membership test for a single monomial.
  bool contains(const Exponent& e) const;

  /// True when every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  bool is_unit() const;

  /// True exactly when the ideal contains a pure power of x and a pure
  /// power of y (the unit ideal qualifies).
  bool is_m_primary() const;

  /// Smallest total degree of a member, i.e. min(i + j) over the generators.
  std::int64_t order() const;

  /// Exponent a of the generator x^a (requires m-primary).
  std::int64_t pure_x_exponent() const;

  /// Exponent b of the generator y^b (requires m-primary).
  std::int64_t pure_y_exponent() const;

  /// dim_k R/I, computed column by column from the staircase.
  /// Throws DomainError("infinite colength") when the ideal is not m-primary.
  Int colength() const;

  /// Componentwise minimum of the generators, the exponent of their gcd.
  Exponent gcd_exponent() const;

  /// Canonical text form, e.g. "x^2,x*y,y^3"; the unit ideal prints as "1".
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Exponent> gens_;
};

/// Minimal generators of the ideal generated by an arbitrary finite set.
MonomialIdeal minimalize(std::vector<Exponent> raw);

/// Ideal sum I + J.
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Ideal product I * J.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// Ideal power I^n for n >= 0 (I^0 is the unit ideal).
MonomialIdeal power(const MonomialIdeal& a, std::int64_t n);

/// Intersection I and J (generated by pairwise lcms).
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Colon ideal (a : b).
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// Translate every generator by the exponent e, i.e. multiply by x^e.i y^e.j.
MonomialIdeal multiply(const MonomialIdeal& a, const Exponent& e);

/// The power (x, y)^n of the maximal ideal, for n >= 0.
MonomialIdeal m_power(std::int64_t n);

/// Binomial coefficient C(n, 2) = n(n-1)/2.
Int choose2(const Int& n);

}  // namespace ideal2d
