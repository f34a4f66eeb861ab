#include "ideal2d/localring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ideal2d {

namespace {

// Monomials of total degree below `modulus`, indexed degree by degree:
// (i, j) with d = i + j maps to column d(d+1)/2 + j.
struct TruncatedSpace {
  std::int64_t modulus;
  std::int64_t dim;

  explicit TruncatedSpace(std::int64_t m)
      : modulus(m), dim(m * (m + 1) / 2) {}

  std::int64_t index(const Exponent& e) const {
    std::int64_t d = e.degree();
    return d * (d + 1) / 2 + e.j;
  }

  bool in_range(const Exponent& e) const { return e.degree() < modulus; }
};

// Row-echelon basis with sparse rows; candidate vectors are dense.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::int64_t dim) : dim_(dim) {}

  std::int64_t rank() const {
    return static_cast<std::int64_t>(rows_.size());
  }

  // Reduces v in place against the rows; returns the column of the leading
  // nonzero entry, or -1 when v lies in the row span.
  std::int64_t reduce(std::vector<Rat>& v) const {
    std::int64_t col = first_nonzero(v, 0);
    while (col >= 0) {
      auto it = pivot_row_.find(col);
      if (it == pivot_row_.end()) return col;
      const SparseRow& row = rows_[it->second];
      Rat factor = v[col];
      for (const auto& [c, val] : row.entries) v[c] -= factor * val;
      col = first_nonzero(v, col + 1);
    }
    return -1;
  }

  // Installs v as a new normalized row when it is independent.
  bool insert(std::vector<Rat>& v) {
    std::int64_t col = reduce(v);
    if (col < 0) return false;
    SparseRow row;
    row.pivot = col;
    const Rat lead = v[col];
    for (std::int64_t c = col; c < dim_; ++c) {
      if (v[c] != 0) row.entries.emplace_back(c, v[c] / lead);
    }
    pivot_row_[col] = rows_.size();
    rows_.push_back(std::move(row));
    return true;
  }

  struct SparseRow {
    std::int64_t pivot = 0;
    std::vector<std::pair<std::int64_t, Rat>> entries;
  };

  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::map<std::int64_t, std::size_t>& pivot_map() const {
    return pivot_row_;
  }

 private:
  std::int64_t first_nonzero(const std::vector<Rat>& v,
                             std::int64_t from) const {
    for (std::int64_t c = from; c < dim_; ++c) {
      if (v[c] != 0) return c;
    }
    return -1;
  }

  std::int64_t dim_;
  std::vector<SparseRow> rows_;
  std::map<std::int64_t, std::size_t> pivot_row_;
};

void clear_vector(std::vector<Rat>& v) {
  for (Rat& c : v) c = 0;
}

void write_truncation(const LocalPolynomial& f, const Exponent& shift,
                      const TruncatedSpace& space, std::vector<Rat>& out) {
  clear_vector(out);
  for (const auto& [e, c] : f.terms()) {
    Exponent moved = e + shift;
    if (space.in_range(moved)) out[space.index(moved)] = c;
  }
}

// Echelon basis of the image of the ideal in R/m^modulus, built from all
// monomial multiples of the generators that survive truncation, inserted
// by increasing leading column.
EchelonBasis image_basis(const std::vector<LocalPolynomial>& gens,
                         const TruncatedSpace& space) {
  struct Multiple {
    std::int64_t lead;
    std::int32_t gen;
    Exponent shift;
  };
  std::vector<Multiple> multiples;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Exponent lead = gens[k].terms().begin()->first;
    std::int64_t room = space.modulus - 1 - gens[k].order();
    for (std::int64_t a = 0; a <= room; ++a) {
      for (std::int64_t b = 0; a + b <= room; ++b) {
        Exponent shift{a, b};
        multiples.push_back(
            {space.index(lead + shift), static_cast<std::int32_t>(k), shift});
      }
    }
  }
  std::sort(multiples.begin(), multiples.end(),
            [](const Multiple& p, const Multiple& q) {
              if (p.lead != q.lead) return p.lead < q.lead;
              if (p.gen != q.gen) return p.gen < q.gen;
              if (p.shift.i != q.shift.i) return p.shift.i < q.shift.i;
              return p.shift.j < q.shift.j;
            });

  EchelonBasis basis(space.dim);
  std::vector<Rat> scratch(space.dim, Rat(0));
  for (const Multiple& mult : multiples) {
    write_truncation(gens[mult.gen], mult.shift, space, scratch);
    basis.insert(scratch);
  }
  return basis;
}

// Nakayama test: every monomial of degree n reduces to zero against the
// image basis taken in R/m^(n+1), which proves m^n lies in the ideal.
bool nakayama_passes(const std::vector<LocalPolynomial>& gens,
                     std::int64_t n, EchelonBasis* out_basis,
                     TruncatedSpace* out_space) {
  TruncatedSpace space(n + 1);
  EchelonBasis basis = image_basis(gens, space);
  std::vector<Rat> scratch(space.dim, Rat(0));
  bool ok = true;
  for (std::int64_t j = 0; j <= n && ok; ++j) {
    clear_vector(scratch);
    scratch[space.index({n - j, j})] = 1;
    ok = basis.reduce(scratch) < 0;
  }
  if (ok) {
    if (out_basis != nullptr) *out_basis = std::move(basis);
    if (out_space != nullptr) *out_space = space;
  }
  return ok;
}

// Deterministic spot check: random monomial multiples of the generators
// must reduce to zero against the basis they were folded into.
void reverify_rows(const std::vector<LocalPolynomial>& gens,
                   const TruncatedSpace& space, const EchelonBasis& basis) {
  std::mt19937_64 rng(0x1dea12d5eed0ull + space.modulus);
  std::vector<Rat> scratch(space.dim, Rat(0));
  for (int trial = 0; trial < 4; ++trial) {
    std::size_t k = rng() % gens.size();
    std::int64_t room = space.modulus - 1 - gens[k].order();
    if (room < 0) continue;
    std::int64_t a = static_cast<std::int64_t>(rng() % (room + 1));
    std::int64_t b = static_cast<std::int64_t>(rng() % (room - a + 1));
    write_truncation(gens[k], {a, b}, space, scratch);
    check_internal(basis.reduce(scratch) < 0,
                   "certificate row re-verification failed");
  }
}

void require_support_m_primary(const std::vector<LocalPolynomial>& gens) {
  std::vector<Exponent> support;
  for (const LocalPolynomial& g : gens) {
    for (const auto& [e, c] : g.terms()) support.push_back(e);
  }
  if (!MonomialIdeal(std::move(support)).is_m_primary()) {
    throw LimitError("ideal not certified m-primary within cap");
  }
}

}  // namespace

LocalPolynomial LocalPolynomial::monomial(const Exponent& e, const Rat& c) {
  LocalPolynomial f;
  f.add_term(e, c);
  return f;
}

std::int64_t LocalPolynomial::order() const {
  if (is_zero()) throw DomainError("order of the zero polynomial");
  return terms_.begin()->first.degree();
}

void LocalPolynomial::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LocalPolynomial LocalPolynomial::operator+(const LocalPolynomial& o) const {
  LocalPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LocalPolynomial LocalPolynomial::operator-(const LocalPolynomial& o) const {
  LocalPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LocalPolynomial LocalPolynomial::operator*(const LocalPolynomial& o) const {
  LocalPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      out.add_term(e1 + e2, c1 * c2);
    }
  }
  return out;
}

LocalPolynomial LocalPolynomial::scaled(const Rat& c) const {
  LocalPolynomial out;
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

LocalPolynomial LocalPolynomial::pow(const LocalPolynomial& base,
                                     std::int64_t n) {
  check_internal(n >= 0, "negative polynomial power");
  LocalPolynomial out = monomial({0, 0});
  for (std::int64_t t = 0; t < n; ++t) out = out * base;
  return out;
}

bool LocalPolynomial::in_monomial_ideal(const MonomialIdeal& a) const {
  for (const auto& [e, c] : terms_) {
    if (!a.contains(e)) return false;
  }
  return true;
}

std::string LocalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? "-" : "+");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string mono = MonomialIdeal::principal(e).to_string();
    if (mono == "1") {
      out << coeff.get_str();
    } else {
      if (coeff != 1) out << coeff.get_str() << "*";
      out << mono;
    }
  }
  return out.str();
}

PolynomialIdeal::PolynomialIdeal(std::vector<LocalPolynomial> gens)
    : gens_(std::move(gens)) {
  if (gens_.empty()) throw DomainError("empty generating set");
  for (const LocalPolynomial& g : gens_) {
    if (g.is_zero()) throw DomainError("zero generator");
  }
}

PolynomialIdeal PolynomialIdeal::from_monomial(const MonomialIdeal& a) {
  std::vector<LocalPolynomial> gens;
  gens.reserve(a.num_min_gens());
  for (const Exponent& e : a.generators()) {
    gens.push_back(LocalPolynomial::monomial(e));
  }
  return PolynomialIdeal(std::move(gens));
}

std::string PolynomialIdeal::to_string() const {
  std::string out;
  for (const LocalPolynomial& g : gens_) {
    if (!out.empty()) out += ",";
    out += g.to_string();
  }
  return out;
}

bool TruncationCertificate::contains(const LocalPolynomial& f) const {
  std::vector<Rat> v(dim_, Rat(0));
  TruncatedSpace space(level_);
  for (const auto& [e, c] : f.terms()) {
    if (space.in_range(e)) v[space.index(e)] = c;
  }
  // Mirror of EchelonBasis::reduce over the stored rows.
  std::int64_t col = -1;
  for (std::int64_t c = 0; c < dim_; ++c) {
    if (v[c] != 0) {
      col = c;
      break;
    }
  }
  while (col >= 0) {
    auto it = pivot_row_.find(col);
    if (it == pivot_row_.end()) return false;
    const SparseRow& row = rows_[it->second];
    Rat factor = v[col];
    for (const auto& [c, val] : row.entries) v[c] -= factor * val;
    std::int64_t next = -1;
    for (std::int64_t c = col + 1; c < dim_; ++c) {
      if (v[c] != 0) {
        next = c;
        break;
      }
    }
    col = next;
  }
  return true;
}

TruncationCertificate certify_m_primary(const PolynomialIdeal& a,
                                        std::int64_t cap) {
  if (cap < 1) throw DomainError("truncation cap must be positive");
  const auto& gens = a.generators();
  require_support_m_primary(gens);

  // The pass predicate is monotone in n: once m^n lies in the ideal, every
  // higher power does as well. Find the smallest passing n by doubling and
  // then bisecting.
  std::int64_t lo = 0;   // known failing (0 never passes for proper ideals)
  std::int64_t hi = -1;  // smallest known passing
  for (std::int64_t n = 1;; n *= 2) {
    if (n > cap) {
      if (nakayama_passes(gens, cap, nullptr, nullptr)) hi = cap;
      break;
    }
    if (nakayama_passes(gens, n, nullptr, nullptr)) {
      hi = n;
      break;
    }
    lo = n;
    if (n == cap) break;
  }
  if (hi < 0) throw LimitError("ideal not certified m-primary within cap");
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (nakayama_passes(gens, mid, nullptr, nullptr)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const std::int64_t level = hi;

  // Basis at the certified level, for the colength and membership tests.
  TruncatedSpace space(level);
  EchelonBasis basis = image_basis(gens, space);
  reverify_rows(gens, space, basis);
  Int colength = Int(space.dim) - Int(basis.rank());

  // Stability: the colength recomputed one level higher must agree.
  TruncatedSpace above(level + 1);
  EchelonBasis basis_above = image_basis(gens, above);
  reverify_rows(gens, above, basis_above);
  check_internal(Int(above.dim) - Int(basis_above.rank()) == colength,
                 "colength is not stable across truncation levels");

  TruncationCertificate cert;
  cert.level_ = level;
  cert.dim_ = space.dim;
  cert.colength_ = colength;
  for (const auto& row : basis.rows()) {
    TruncationCertificate::SparseRow copy;
    copy.pivot = row.pivot;
    copy.entries = row.entries;
    cert.rows_.push_back(std::move(copy));
  }
  for (const auto& [pivot, idx] : basis.pivot_map()) {
    cert.pivot_row_[pivot] = idx;
  }
  return cert;
}

Int colength_poly(const PolynomialIdeal& a, std::int64_t cap) {
  return certify_m_primary(a, cap).colength();
}

Int pair_multiplicity(const LocalPolynomial& a, const LocalPolynomial& b,
                      std::int64_t cap) {
  return colength_poly(PolynomialIdeal({a, b}), cap);
}

bool contains(const PolynomialIdeal& a, const LocalPolynomial& f,
              std::int64_t cap) {
  return certify_m_primary(a, cap).contains(f);
}

bool ideals_equal(const PolynomialIdeal& a, const PolynomialIdeal& b,
                  std::int64_t cap) {
  TruncationCertificate ca = certify_m_primary(a, cap);
  TruncationCertificate cb = certify_m_primary(b, cap);
  if (ca.colength() != cb.colength()) return false;
  for (const LocalPolynomial& g : a.generators()) {
    if (!cb.contains(g)) return false;
  }
  for (const LocalPolynomial& g : b.generators()) {
    if (!ca.contains(g)) return false;
  }
  return true;
}

bool ideals_equal(const PolynomialIdeal& a, const MonomialIdeal& b,
                  std::int64_t cap) {
  for (const LocalPolynomial& g : a.generators()) {
    if (!g.in_monomial_ideal(b)) return false;
  }
  TruncationCertificate ca = certify_m_primary(a, cap);
  for (const Exponent& e : b.generators()) {
    if (!ca.contains(LocalPolynomial::monomial(e))) return false;
  }
  return true;
}

bool is_reduction(const LocalPolynomial& a, const LocalPolynomial& b,
                  const MonomialIdeal& i, std::int64_t cap,
                  std::string* diagnostic) {
  if (!a.in_monomial_ideal(i) || !b.in_monomial_ideal(i)) {
    throw DomainError("not contained in the ideal");
  }
  Int target = multiplicity(i);
  Int e;
  try {
    e = pair_multiplicity(a, b, cap);
  } catch (const LimitError& err) {
    if (diagnostic != nullptr) *diagnostic = err.what();
    return false;
  }
  if (e != target) {
    if (diagnostic != nullptr) {
      *diagnostic = "pair multiplicity " + e.get_str() + ", expected " +
                    target.get_str();
    }
    return false;
  }
  return true;
}

bool is_joint_reduction(const LocalPolynomial& a, const LocalPolynomial& b,
                        const MonomialIdeal& i, const MonomialIdeal& j,
                        std::int64_t cap, std::string* diagnostic) {
  if (!a.in_monomial_ideal(i) || !b.in_monomial_ideal(j)) {
    throw DomainError("not contained in the ideal");
  }
  Int target = mixed_e1(i, j);
  Int e;
  try {
    e = pair_multiplicity(a, b, cap);
  } catch (const LimitError& err) {
    if (diagnostic != nullptr) *diagnostic = err.what();
    return false;
  }
  if (e != target) {
    if (diagnostic != nullptr) {
      *diagnostic = "pair multiplicity " + e.get_str() + ", expected " +
                    target.get_str();
    }
    return false;
  }
  return true;
}

}  // namespace ideal2d
