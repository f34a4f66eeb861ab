// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Every check is exact; no tolerances.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ideal2d/adjoint.hpp"
#include "ideal2d/localring.hpp"
#include "ideal2d/verify.hpp"

namespace {

using namespace ideal2d;

MonomialIdeal ideal_i51() { return MonomialIdeal({{2, 0}, {1, 1}, {0, 3}}); }
MonomialIdeal ideal_k51() { return MonomialIdeal({{3, 0}, {1, 1}, {0, 2}}); }

MonomialIdeal ideal_i52(std::int64_t u) {
  return MonomialIdeal({{u, 0}, {1, 1}, {0, u + 1}});
}
MonomialIdeal ideal_k52(std::int64_t u) {
  return MonomialIdeal({{u + 1, 0}, {1, 1}, {0, u}});
}
MonomialIdeal companion52(std::int64_t u) {
  return MonomialIdeal({{u, 0}, {1, 1}, {0, u}});
}

LocalPolynomial mono(std::int64_t i, std::int64_t j) {
  return LocalPolynomial::monomial({i, j});
}

bool check(bool condition, const char* label) {
  if (!condition) std::printf("        failed: %s\n", label);
  return condition;
}

bool criterion1_first_example_scalars() {
  bool ok = true;
  ok &= check(multiplicity(ideal_i51()) == 5, "e(I) == 5");
  ok &= check(multiplicity(ideal_k51()) == 5, "e(K) == 5");
  ok &= check(mixed_e1(ideal_i51(), ideal_k51()) == 4, "e1(I|K) == 4");
  ok &= check(pair_multiplicity(mono(2, 0), mono(0, 2)) == 4,
              "e(x^2, y^2) == 4");
  ok &= check(ideal_i51().colength() == 4, "colength(I) == 4");
  return ok;
}

bool criterion2_first_example_ideals() {
  const MonomialIdeal i = ideal_i51();
  const MonomialIdeal k = ideal_k51();
  const MonomialIdeal m = m_power(1);
  bool ok = true;
  for (std::int64_t n = 1; n <= 8; ++n) {
    ok &= check(adjoint(power(i, n)) == product(m, power(i, n - 1)),
                "adj(I^n) == m * I^(n-1)");
  }
  for (std::int64_t r = 1; r <= 4; ++r) {
    for (std::int64_t s = 1; s <= 4; ++s) {
      const MonomialIdeal rs = product(power(i, r), power(k, s));
      const MonomialIdeal base =
          product(m_power(3), product(power(i, r - 1), power(k, s - 1)));
      ok &= check(adjoint(rs) == base, "adj(I^r K^s) == m^3 I^(r-1) K^(s-1)");
      const MonomialIdeal core_expected = product(
          m_power(3), product(power(i, 2 * r - 1), power(k, 2 * s - 1)));
      ok &= check(core(rs) == core_expected,
                  "core(I^r K^s) == m^3 I^(2r-1) K^(2s-1)");
    }
  }
  return ok;
}

bool criterion3_first_example_colengths() {
  const MonomialIdeal i = ideal_i51();
  const MonomialIdeal k = ideal_k51();
  bool ok = true;
  for (std::int64_t n = 1; n <= 8; ++n) {
    const Int expected = 5 * choose2(Int(n + 1)) - 4 * Int(n);
    ok &= check(adjoint(power(i, n)).colength() == expected,
                "colength(adj(I^n)) == 5C(n+1,2) - 4n");
  }
  for (std::int64_t r = 1; r <= 4; ++r) {
    for (std::int64_t s = 1; s <= 4; ++s) {
      const MonomialIdeal rs = product(power(i, r), power(k, s));
      const Int adj_expected = 5 * choose2(Int(r + 1)) + 4 * Int(r) * Int(s) +
                               5 * choose2(Int(s + 1)) - 4 * Int(r) -
                               4 * Int(s);
      ok &= check(adjoint(rs).colength() == adj_expected,
                  "colength(adj(I^r K^s)) formula");
      const Int core_expected = 20 * choose2(Int(r + 1)) +
                                16 * Int(r) * Int(s) +
                                20 * choose2(Int(s + 1)) - 13 * Int(r) -
                                13 * Int(s);
      ok &= check(core(rs).colength() == core_expected,
                  "colength(core(I^r K^s)) formula");
    }
  }
  return ok;
}

bool criterion4_second_example_family() {
  bool ok = true;
  for (std::int64_t u = 3; u <= 5; ++u) {
    const MonomialIdeal i = ideal_i52(u);
    const MonomialIdeal k = ideal_k52(u);
    const MonomialIdeal g = companion52(u);
    ok &= check(multiplicity(i) == 2 * u + 1, "e(I) == 2u+1");
    ok &= check(i.colength() == 2 * u, "colength(I) == 2u");
    ok &= check(mixed_e1(i, k) == 2 * u, "e1(I|K) == 2u");
    ok &= check(adjoint(product(i, k)) ==
                    MonomialIdeal({{u + 1, 0}, {2, 1}, {1, 2}, {0, u + 1}}),
                "adj(IK) closed form");
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (std::int64_t s = 1; s <= 3; ++s) {
        const MonomialIdeal rs = product(power(i, r), power(k, s));
        const MonomialIdeal adj_expected = product(
            m_power(1),
            product(product(power(i, r - 1), power(k, s - 1)), g));
        ok &= check(adjoint(rs) == adj_expected,
                    "adj(I^r K^s) == m I^(r-1) K^(s-1) G");
        const Int e = 2 * Int(u) + 1;
        const Int adj_colength = e * choose2(Int(r + 1)) +
                                 2 * Int(u) * Int(r) * Int(s) +
                                 e * choose2(Int(s + 1)) -
                                 2 * Int(u) * Int(r) - 2 * Int(u) * Int(s);
        ok &= check(adjoint(rs).colength() == adj_colength,
                    "colength(adj(I^r K^s)) formula");
        const MonomialIdeal core_expected = product(
            m_power(1),
            product(product(power(i, 2 * r - 1), power(k, 2 * s - 1)), g));
        ok &= check(core(rs) == core_expected,
                    "core(I^r K^s) == m I^(2r-1) K^(2s-1) G");
        const Int core_colength =
            4 * e * choose2(Int(r + 1)) + 8 * Int(u) * Int(r) * Int(s) +
            4 * e * choose2(Int(s + 1)) - (6 * Int(u) + 1) * Int(r) -
            (6 * Int(u) + 1) * Int(s);
        ok &= check(core(rs).colength() == core_colength,
                    "colength(core(I^r K^s)) formula");
      }
    }
    const std::vector<VerificationReport> suite =
        verify_ex52(u, 3, 3, 3, kDefaultTruncationCap);
    ok &= check(all_passed(suite), "full second-example suite");
  }
  return ok;
}

bool criterion5_kn_adjoints() {
  bool ok = true;
  for (std::int64_t n = 2; n <= 8; ++n) {
    const MonomialIdeal kn({{2 * n - 3, 0}, {n - 2, 1}, {0, 2}});
    const MonomialIdeal expected =
        n == 2 ? MonomialIdeal::unit() : MonomialIdeal({{n - 2, 0}, {0, 1}});
    ok &= check(adjoint(kn) == expected, "adj(K_n) == (x^(n-2), y)");
  }
  return ok;
}

bool criterion6_certificates() {
  bool ok = true;
  ok &= check(is_joint_reduction(mono(2, 0), mono(0, 2), ideal_i51(),
                                 ideal_k51()),
              "(x^2, y^2) joint reduction for the first example");
  for (std::int64_t u = 3; u <= 5; ++u) {
    const LocalPolynomial a = mono(1, 1) + mono(u, 0);
    const LocalPolynomial b = mono(1, 1) + mono(0, u);
    ok &= check(pair_multiplicity(a, b) == 2 * u, "e(a, b) == 2u");
    ok &= check(is_joint_reduction(a, b, ideal_i52(u), ideal_k52(u)),
                "(xy+x^u, xy+y^u) joint reduction");
  }
  ok &= check(is_reduction(mono(1, 1), mono(2, 0) + mono(0, 3), ideal_i51()),
              "(xy, x^2+y^3) reduction with e == 5");
  ok &= check(pair_multiplicity(mono(1, 1), mono(2, 0) + mono(0, 3)) == 5,
              "e(xy, x^2+y^3) == 5");
  ok &= check(pair_multiplicity(mono(1, 0), mono(2, 0) + mono(0, 3)) == 3,
              "colength(x, x^2+y^3) == 3");
  ok &= check(pair_multiplicity(mono(0, 1), mono(2, 0) + mono(0, 3)) == 2,
              "colength(y, x^2+y^3) == 2");
  return ok;
}

struct CorpusResults {
  std::vector<VerificationReport> reports;
  bool ran = false;
};

CorpusResults& corpus_results() {
  static CorpusResults results;
  if (!results.ran) {
    CorpusRunOptions options;
    results.reports = verify_corpus(options);
    results.ran = true;
  }
  return results;
}

bool criterion7_corpus_oracles() {
  const auto& reports = corpus_results().reports;
  bool ok = true;
  std::set<std::int64_t> ideals_seen;
  std::size_t oracle_claims = 0;
  for (const VerificationReport& r : reports) {
    if (r.claim_id == "corpus.hd_colength" ||
        r.claim_id == "corpus.hd_multiplicity" ||
        r.claim_id == "corpus.hd_e1" || r.claim_id == "corpus.hd_mixed_e1" ||
        r.claim_id == "corpus.adjoint_oracle") {
      ++oracle_claims;
      ok &= check(r.passed, r.claim_id.c_str());
      if (r.params.count("ideal")) ideals_seen.insert(r.params.at("ideal"));
    }
  }
  ok &= check(ideals_seen.size() == 200, "all 200 corpus ideals covered");
  ok &= check(oracle_claims >= 200 * 4, "oracle claim volume");
  return ok;
}

bool criterion8_corpus_theorem_suites() {
  const auto& reports = corpus_results().reports;
  bool ok = true;
  std::set<std::int64_t> pairs_seen;
  std::size_t briancon_skoda = 0;
  std::size_t certified = 0;
  std::size_t rees_sally = 0;
  for (const VerificationReport& r : reports) {
    ok &= check(r.passed, r.claim_id.c_str());
    if (r.params.count("pair")) pairs_seen.insert(r.params.at("pair"));
    if (r.claim_id == "corpus.briancon_skoda") ++briancon_skoda;
    if (r.claim_id == "corpus.joint_reduction_certificate") ++certified;
    if (r.claim_id == "corpus.rees_sally") ++rees_sally;
  }
  ok &= check(pairs_seen.size() == 50, "all 50 corpus pairs covered");
  ok &= check(briancon_skoda == 200, "adj(I^2) == core(I) on every ideal");
  ok &= check(certified >= 40, "at least 40 certified joint reductions");
  ok &= check(rees_sally == certified,
              "containment tested for every certified pair");
  return ok;
}

bool criterion9_no_large_scale_experiment() {
  std::printf(
      "        note: every claim above is a closed-form identity checked "
      "exactly; no larger experiment exists to reproduce\n");
  return true;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"first example scalars (e, e1, colength)",
       criterion1_first_example_scalars},
      {"first example adjoint/core ideal identities (n <= 8, r,s <= 4)",
       criterion2_first_example_ideals},
      {"first example adjoint/core colength formulas",
       criterion3_first_example_colengths},
      {"second example family u in {3,4,5} (r,s,n <= 3)",
       criterion4_second_example_family},
      {"adjoint closed form for the K_n family (2 <= n <= 8)",
       criterion5_kn_adjoints},
      {"reduction and joint-reduction certificates",
       criterion6_certificates},
      {"corpus oracle equivalences (200 seeded complete ideals)",
       criterion7_corpus_oracles},
      {"corpus theorem suites (50 pairs, r,s <= 3)",
       criterion8_corpus_theorem_suites},
      {"no large-scale experiment to reproduce (informational)",
       criterion9_no_large_scale_experiment},
  };

  int failures = 0;
  for (std::size_t t = 0; t < criteria.size(); ++t) {
    bool ok = false;
    std::string note;
    try {
      ok = criteria[t].second();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    std::printf("%s  %zu: %s%s\n", ok ? "PASS" : "FAIL", t + 1,
                criteria[t].first.c_str(), note.c_str());
    if (!ok) ++failures;
  }

  const auto stop = std::chrono::steady_clock::now();
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start);
  std::printf("%zu criteria, %d failed, %lld ms total\n", criteria.size(),
              failures, static_cast<long long>(ms.count()));
  return failures == 0 ? 0 : 1;
}
