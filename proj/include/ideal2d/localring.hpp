// Exact linear algebra in truncations of the local ring k[[x, y]] with
// rational coefficients: m-primary certification, colengths of polynomial
// ideals, membership, and reduction tests against monomial ideals.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ideal2d/newton.hpp"
#include "ideal2d/staircase.hpp"

namespace ideal2d {

/// Default bound on the truncation degree searched during certification.
inline constexpr std::int64_t kDefaultTruncationCap = 64;

/// Graded order on exponents: by total degree, then by increasing j.
struct GradedLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.j < b.j;
  }
};

/// A polynomial (or truncated power series) with rational coefficients.
class LocalPolynomial {
 public:
  using TermMap = std::map<Exponent, Rat, GradedLess>;

  /// The zero polynomial.
  LocalPolynomial() = default;

  static LocalPolynomial monomial(const Exponent& e, const Rat& coeff = 1);

  bool is_zero() const { return terms_.empty(); }

  /// Smallest total degree of a term; requires a nonzero polynomial.
  std::int64_t order() const;

  const TermMap& terms() const { return terms_; }

  LocalPolynomial operator+(const LocalPolynomial& o) const;
  LocalPolynomial operator-(const LocalPolynomial& o) const;
  LocalPolynomial operator*(const LocalPolynomial& o) const;
  LocalPolynomial scaled(const Rat& c) const;

  static LocalPolynomial pow(const LocalPolynomial& base, std::int64_t n);

  /// True when every term lies in the monomial ideal.
  bool in_monomial_ideal(const MonomialIdeal& a) const;

  /// Canonical text form, terms in graded order, e.g. "x*y+2/3*y^4".
  std::string to_string() const;

  friend bool operator==(const LocalPolynomial&, const LocalPolynomial&) =
      default;

 private:
  void add_term(const Exponent& e, const Rat& c);

  TermMap terms_;
};

/// An ideal of k[[x, y]] given by finitely many nonzero polynomial
/// generators.
class PolynomialIdeal {
 public:
  /// Throws DomainError("empty generating set") or
  /// DomainError("zero generator").
  explicit PolynomialIdeal(std::vector<LocalPolynomial> gens);

  static PolynomialIdeal from_monomial(const MonomialIdeal& a);

  const std::vector<LocalPolynomial>& generators() const { return gens_; }

  std::string to_string() const;

 private:
  std::vector<LocalPolynomial> gens_;
};

/// Proof object that m^N lies in a polynomial ideal, carrying an echelon
/// basis of the ideal's image in R/m^N. The level N is the smallest that
/// passes the Nakayama test within the configured cap.
class TruncationCertificate {
 public:
  std::int64_t level() const { return level_; }

  /// dim_k R/(the certified ideal).
  Int colength() const { return colength_; }

  /// Exact membership test: valid because m^level lies in the ideal.
  bool contains(const LocalPolynomial& f) const;

 private:
  friend TruncationCertificate certify_m_primary(const PolynomialIdeal& a,
                                                 std::int64_t cap);

  struct SparseRow {
    std::int64_t pivot = 0;
    std::vector<std::pair<std::int64_t, Rat>> entries;
  };

  std::int64_t level_ = 0;
  std::int64_t dim_ = 0;
  Int colength_ = 0;
  std::vector<SparseRow> rows_;
  std::map<std::int64_t, std::size_t> pivot_row_;
};

/// Certifies that the ideal is m-primary and returns the certificate.
/// Throws LimitError("ideal not certified m-primary within cap") when no
/// truncation level up to `cap` passes the Nakayama test.
TruncationCertificate certify_m_primary(
    const PolynomialIdeal& a, std::int64_t cap = kDefaultTruncationCap);

/// dim_k R/a for an m-primary polynomial ideal.
Int colength_poly(const PolynomialIdeal& a,
                  std::int64_t cap = kDefaultTruncationCap);

/// Multiplicity of the parameter pair (a, b), equal to the colength of the
/// ideal it generates.
Int pair_multiplicity(const LocalPolynomial& a, const LocalPolynomial& b,
                      std::int64_t cap = kDefaultTruncationCap);

/// Membership of f in the polynomial ideal.
bool contains(const PolynomialIdeal& a, const LocalPolynomial& f,
              std::int64_t cap = kDefaultTruncationCap);

/// Equality of two polynomial ideals via mutual containment.
bool ideals_equal(const PolynomialIdeal& a, const PolynomialIdeal& b,
                  std::int64_t cap = kDefaultTruncationCap);

/// Equality of a polynomial ideal and a monomial ideal.
bool ideals_equal(const PolynomialIdeal& a, const MonomialIdeal& b,
                  std::int64_t cap = kDefaultTruncationCap);

/// True when (a, b) generates a reduction of the m-primary monomial ideal
/// `i`, i.e. both lie in `i` and the pair multiplicity equals e(i).
/// Throws DomainError("not contained in the ideal") when a or b is not in
/// `i`; a certification failure yields false with a diagnostic.
bool is_reduction(const LocalPolynomial& a, const LocalPolynomial& b,
                  const MonomialIdeal& i,
                  std::int64_t cap = kDefaultTruncationCap,
                  std::string* diagnostic = nullptr);

/// True when (a, b) with a in `i`, b in `j` is a joint reduction of the
/// pair, i.e. the pair multiplicity equals the mixed multiplicity
/// e_1(i | j). Containment failures throw; certification failures yield
/// false with a diagnostic.
bool is_joint_reduction(const LocalPolynomial& a, const LocalPolynomial& b,
                        const MonomialIdeal& i, const MonomialIdeal& j,
                        std::int64_t cap = kDefaultTruncationCap,
                        std::string* diagnostic = nullptr);

}  // namespace ideal2d
