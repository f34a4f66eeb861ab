// Adjoint ideals computed by chart recursion over quadratic transforms,
// and cores of complete m-primary ideals.
#pragma once

#include <optional>
#include <utility>

#include "ideal2d/newton.hpp"
#include "ideal2d/staircase.hpp"
#include "ideal2d/transforms.hpp"

namespace ideal2d {

/// Record of the top level of the adjoint recursion.
struct AdjointTrace {
  MonomialIdeal input = MonomialIdeal::unit();
  /// Monomial gcd split off before recursing; the recursion runs on the
  /// gcd-free part, which is automatically m-primary or unit.
  Exponent stripped_factor;
  /// Contractions of the two chart adjoints, absent in the base case
  /// (gcd-free part of order at most one). When present, `result` equals
  /// their intersection translated by `stripped_factor`.
  std::optional<std::pair<MonomialIdeal, MonomialIdeal>> chart_results;
  MonomialIdeal result = MonomialIdeal::unit();
};

/// Adjoint of any nonzero monomial ideal.
MonomialIdeal adjoint(const MonomialIdeal& a);

/// Adjoint plus the top-level recursion record.
AdjointTrace adjoint_trace(const MonomialIdeal& a);

/// Core of a complete m-primary ideal, computed as I * adjoint(I).
/// Throws DomainError("core formula requires a complete ideal") otherwise.
MonomialIdeal core(const MonomialIdeal& a);

/// adj(I^n), recomputed through the factored form I^(n-1) * adj(I) and
/// checked against the direct recursion; requires a complete ideal and
/// n >= 1.
MonomialIdeal adjoint_power(const MonomialIdeal& a, std::int64_t n);

/// adj(I^r J^s), recomputed through the decomposition
/// I^r adj(J^s) + J^s adj(I^r) and checked against the direct recursion;
/// requires complete ideals and r, s >= 1.
MonomialIdeal adj_product(const MonomialIdeal& a, const MonomialIdeal& b,
                          std::int64_t r, std::int64_t s);

/// core(I^r J^s), recomputed through the decomposition
/// I^(2r) core(J^s) + core(I^r) J^(2s) and checked against the direct
/// formula; requires complete ideals and r, s >= 1.
MonomialIdeal core_product(const MonomialIdeal& a, const MonomialIdeal& b,
                           std::int64_t r, std::int64_t s);

}  // namespace ideal2d
