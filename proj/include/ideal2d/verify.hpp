// Verification suites: each suite evaluates a family of ideal identities
// and colength formulas claim by claim, reporting both sides of every
// claim instead of asserting.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ideal2d/corpus.hpp"
#include "ideal2d/localring.hpp"
#include "ideal2d/report.hpp"
#include "ideal2d/staircase.hpp"

namespace ideal2d {

/// Reconciles the point-basis sums of a complete ideal with its colength,
/// multiplicity, and first Hilbert coefficient; returns a single report.
VerificationReport verify_hd(const MonomialIdeal& a);

struct PairSuiteOptions {
  std::int64_t r_max = 3;
  std::int64_t s_max = 3;
  /// Optional element pair (a, b) enabling the polynomial-form claims.
  std::optional<std::pair<LocalPolynomial, LocalPolynomial>> elements;
  std::int64_t cap = kDefaultTruncationCap;
  /// Emit the input-independent integer identity grid (sec4 only).
  bool include_integer_identity = true;
  /// Extra parameters merged into every claim (used by the corpus driver).
  std::map<std::string, std::int64_t> extra_params;
};

/// Adjoint identities: colength formulas for adjoints of powers and
/// products, factor containment, decomposition of adj(I^r J^s), and
/// subadditivity. Requires complete m-primary inputs.
std::vector<VerificationReport> verify_sec3(const MonomialIdeal& i,
                                            const MonomialIdeal& j,
                                            const PairSuiteOptions& options);

/// Core identities: multiplicity sums over point bases, core colength
/// formulas, core decompositions and recursions, and subadditivity.
/// Requires complete m-primary inputs.
std::vector<VerificationReport> verify_sec4(const MonomialIdeal& i,
                                            const MonomialIdeal& j,
                                            const PairSuiteOptions& options);

/// First worked example family: I = (x^2, x*y, y^3) and K = (x^3, x*y, y^2),
/// with closed forms for adjoints, cores, and their colengths, plus
/// reduction and joint-reduction certificates.
std::vector<VerificationReport> verify_ex51(std::int64_t r_max,
                                            std::int64_t s_max,
                                            std::int64_t n_max,
                                            std::int64_t cap);

/// Second worked example family, parametric in u >= 3:
/// I = (x^u, x*y, y^(u+1)) and K = (x^(u+1), x*y, y^u).
std::vector<VerificationReport> verify_ex52(std::int64_t u, std::int64_t r_max,
                                            std::int64_t s_max,
                                            std::int64_t n_max,
                                            std::int64_t cap);

struct CorpusRunOptions {
  CorpusSpec spec;
  /// Number of consecutive disjoint pairs drawn from the corpus.
  std::int64_t pair_count = 50;
  std::int64_t r_max = 3;
  std::int64_t s_max = 3;
  std::int64_t cap = kDefaultTruncationCap;
  /// Joint-reduction certification is attempted only when e_1(I | J) is at
  /// most this bound; exact certificates get expensive as e_1 grows.
  std::int64_t certify_threshold = 48;
};

/// Runs the oracle equivalences on every corpus ideal and the adjoint/core
/// suites plus certified containments on the corpus pairs.
std::vector<VerificationReport> verify_corpus(const CorpusRunOptions& options);

}  // namespace ideal2d
