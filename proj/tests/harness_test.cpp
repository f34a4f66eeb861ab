#include "ideal2d/verify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "ideal2d/errors.hpp"
#include "ideal2d/report.hpp"

namespace ideal2d {
namespace {

const MonomialIdeal& ideal_i51() {
  static const MonomialIdeal a({{2, 0}, {1, 1}, {0, 3}});
  return a;
}

const MonomialIdeal& ideal_k51() {
  static const MonomialIdeal a({{3, 0}, {1, 1}, {0, 2}});
  return a;
}

LocalPolynomial mono(std::int64_t i, std::int64_t j) {
  return LocalPolynomial::monomial({i, j});
}

void expect_well_formed(const std::vector<VerificationReport>& reports) {
  ASSERT_FALSE(reports.empty());
  std::set<std::pair<std::string, std::map<std::string, std::int64_t>>> seen;
  for (const VerificationReport& r : reports) {
    EXPECT_EQ(r.passed, r.lhs == r.rhs) << r.claim_id << " lhs=" << r.lhs;
    EXPECT_FALSE(r.claim_id.empty());
    EXPECT_GE(r.runtime_ms, 0);
    EXPECT_TRUE(seen.insert({r.claim_id, r.params}).second)
        << "duplicate claim " << r.claim_id;
  }
  std::vector<VerificationReport> sorted = reports;
  sort_reports(sorted);
  for (std::size_t t = 0; t < reports.size(); ++t) {
    EXPECT_EQ(sorted[t].claim_id, reports[t].claim_id);
    EXPECT_EQ(sorted[t].params, reports[t].params);
  }
}

std::set<std::string> claim_ids(const std::vector<VerificationReport>& reports) {
  std::set<std::string> ids;
  for (const VerificationReport& r : reports) ids.insert(r.claim_id);
  return ids;
}

TEST(VerifyHdTest, ReconcilesTheThreeSums) {
  const VerificationReport r = verify_hd(ideal_i51());
  EXPECT_EQ("hd.reconciliation", r.claim_id);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ("lambda=4;e=5;e1=1", r.lhs);
  EXPECT_EQ(r.lhs, r.rhs);

  EXPECT_THROW(verify_hd(MonomialIdeal({{4, 0}, {0, 3}})), DomainError);
}

TEST(PairSuiteTest, AdjointSuitePassesAndIsWellFormed) {
  PairSuiteOptions options;
  options.r_max = 2;
  options.s_max = 2;
  const std::vector<VerificationReport> reports =
      verify_sec3(ideal_i51(), ideal_k51(), options);
  expect_well_formed(reports);
  EXPECT_TRUE(all_passed(reports));

  const std::set<std::string> ids = claim_ids(reports);
  EXPECT_TRUE(ids.count("sec3.adjoint_power_colength"));
  EXPECT_TRUE(ids.count("sec3.adjoint_power_factor"));
  EXPECT_TRUE(ids.count("sec3.adjoint_factor_containment"));
  EXPECT_TRUE(ids.count("sec3.adjoint_subadditivity"));
  EXPECT_TRUE(ids.count("sec3.adjoint_product_colength"));
  EXPECT_TRUE(ids.count("sec3.adjoint_product_split"));
  EXPECT_FALSE(ids.count("sec3.joint_reduction_certificate"));
  for (const std::string& id : ids) {
    EXPECT_EQ(0u, id.find("sec3.")) << id;
  }
}

TEST(PairSuiteTest, CoreSuitePassesAndIsWellFormed) {
  PairSuiteOptions options;
  options.r_max = 2;
  options.s_max = 2;
  options.include_integer_identity = false;
  const std::vector<VerificationReport> reports =
      verify_sec4(ideal_i51(), ideal_k51(), options);
  expect_well_formed(reports);
  EXPECT_TRUE(all_passed(reports));

  const std::set<std::string> ids = claim_ids(reports);
  EXPECT_TRUE(ids.count("sec4.multiplicity_power"));
  EXPECT_TRUE(ids.count("sec4.adjoint_multiplicity"));
  EXPECT_TRUE(ids.count("sec4.core_power_colength"));
  EXPECT_TRUE(ids.count("sec4.core_colength_additivity"));
  EXPECT_TRUE(ids.count("sec4.core_power_via_adjoint"));
  EXPECT_TRUE(ids.count("sec4.core_power_as_double_adjoint"));
  EXPECT_TRUE(ids.count("sec4.core_power_recursion"));
  EXPECT_TRUE(ids.count("sec4.core_product_colength"));
  EXPECT_TRUE(ids.count("sec4.core_product_split"));
  EXPECT_TRUE(ids.count("sec4.core_factor_containment"));
  EXPECT_TRUE(ids.count("sec4.core_subadditivity"));
  EXPECT_FALSE(ids.count("sec4.binomial_identity"));
}

TEST(PairSuiteTest, IntegerIdentityGridIsOptional) {
  PairSuiteOptions with_grid;
  with_grid.r_max = 1;
  with_grid.s_max = 1;
  PairSuiteOptions without_grid = with_grid;
  without_grid.include_integer_identity = false;
  const auto grid = verify_sec4(ideal_i51(), ideal_k51(), with_grid);
  const auto plain = verify_sec4(ideal_i51(), ideal_k51(), without_grid);
  std::size_t grid_claims = 0;
  for (const VerificationReport& r : grid) {
    if (r.claim_id == "sec4.binomial_identity") ++grid_claims;
  }
  EXPECT_EQ(21u * 21u, grid_claims);
  EXPECT_EQ(plain.size() + grid_claims, grid.size());
}

TEST(PairSuiteTest, ExtraParamsAreMergedIntoEveryClaim) {
  PairSuiteOptions options;
  options.r_max = 1;
  options.s_max = 1;
  options.extra_params = {{"pair", 7}};
  const auto reports = verify_sec3(ideal_i51(), ideal_k51(), options);
  for (const VerificationReport& r : reports) {
    ASSERT_TRUE(r.params.count("pair")) << r.claim_id;
    EXPECT_EQ(7, r.params.at("pair"));
  }
}

TEST(PairSuiteTest, ElementClaimsRequireACertifiedPair) {
  PairSuiteOptions options;
  options.r_max = 2;
  options.s_max = 2;
  options.elements = {{mono(2, 0), mono(0, 2)}};
  const auto reports = verify_sec3(ideal_i51(), ideal_k51(), options);
  expect_well_formed(reports);
  EXPECT_TRUE(all_passed(reports));
  const std::set<std::string> ids = claim_ids(reports);
  EXPECT_TRUE(ids.count("sec3.joint_reduction_certificate"));
  EXPECT_TRUE(ids.count("sec3.adjoint_product_split_elements"));
  EXPECT_FALSE(ids.count("sec3.adjoint_power_factor_elements"));
}

TEST(PairSuiteTest, DiagonalElementClaimsCoverPowerRecursions) {
  PairSuiteOptions options;
  options.r_max = 2;
  options.s_max = 2;
  options.include_integer_identity = false;
  options.elements = {{mono(1, 1), mono(2, 0) + mono(0, 3)}};
  const auto sec3 = verify_sec3(ideal_i51(), ideal_i51(), options);
  EXPECT_TRUE(all_passed(sec3));
  EXPECT_TRUE(claim_ids(sec3).count("sec3.adjoint_power_factor_elements"));
  const auto sec4 = verify_sec4(ideal_i51(), ideal_i51(), options);
  EXPECT_TRUE(all_passed(sec4));
  EXPECT_TRUE(claim_ids(sec4).count("sec4.core_power_recursion_elements"));
}

TEST(PairSuiteTest, InputValidation) {
  PairSuiteOptions options;
  EXPECT_THROW(
      {
        try {
          verify_sec3(MonomialIdeal({{4, 0}, {0, 3}}), ideal_k51(), options);
        } catch (const DomainError& e) {
          EXPECT_STREQ("suite requires a complete m-primary ideal", e.what());
          throw;
        }
      },
      DomainError);
  EXPECT_THROW(verify_sec4(ideal_i51(), MonomialIdeal({{2, 1}, {0, 3}}),
                           options),
               DomainError);
  options.r_max = 0;
  EXPECT_THROW(
      {
        try {
          verify_sec3(ideal_i51(), ideal_k51(), options);
        } catch (const DomainError& e) {
          EXPECT_STREQ("power bounds must be at least 1", e.what());
          throw;
        }
      },
      DomainError);
}

TEST(ExampleSuiteTest, FirstFamilyPasses) {
  const auto reports = verify_ex51(2, 2, 3, kDefaultTruncationCap);
  expect_well_formed(reports);
  EXPECT_TRUE(all_passed(reports));
  const std::set<std::string> ids = claim_ids(reports);
  EXPECT_TRUE(ids.count("ex51.colength"));
  EXPECT_TRUE(ids.count("ex51.point_basis_orders"));
  EXPECT_TRUE(ids.count("ex51.adjoint_power_ideal"));
  EXPECT_TRUE(ids.count("ex51.core_product_ideal"));
  EXPECT_TRUE(ids.count("ex51.core_product_colength"));
  EXPECT_TRUE(ids.count("ex51.joint_reduction_certificate"));
  EXPECT_TRUE(ids.count("ex51.reduction_certificate"));
  EXPECT_TRUE(ids.count("ex51.reduction_multiplicity_split"));
  EXPECT_TRUE(ids.count("ex51.reduction_multiplicity_additivity"));
}

TEST(ExampleSuiteTest, SecondFamilyPassesForSmallU) {
  for (std::int64_t u = 3; u <= 4; ++u) {
    const auto reports = verify_ex52(u, 2, 2, 2, kDefaultTruncationCap);
    expect_well_formed(reports);
    EXPECT_TRUE(all_passed(reports)) << "u=" << u;
    const std::set<std::string> ids = claim_ids(reports);
    EXPECT_TRUE(ids.count("ex52.colength"));
    EXPECT_TRUE(ids.count("ex52.intersection_form"));
    EXPECT_TRUE(ids.count("ex52.adjoint_product_ideal"));
    EXPECT_TRUE(ids.count("ex52.core_product_ideal"));
    EXPECT_TRUE(ids.count("ex52.core_product_colength"));
    EXPECT_TRUE(ids.count("ex52.kn_adjoint"));
    EXPECT_TRUE(ids.count("ex52.joint_reduction_certificate"));
  }
  EXPECT_THROW(
      {
        try {
          verify_ex52(2, 1, 1, 1, kDefaultTruncationCap);
        } catch (const DomainError& e) {
          EXPECT_STREQ("u must be at least 3", e.what());
          throw;
        }
      },
      DomainError);
}

TEST(CorpusSuiteTest, SmallRunIsWellFormed) {
  CorpusRunOptions options;
  options.spec = {3, 6, 3, 8};
  options.pair_count = 2;
  options.r_max = 1;
  options.s_max = 1;
  const auto reports = verify_corpus(options);
  expect_well_formed(reports);
  EXPECT_TRUE(all_passed(reports));
  const std::set<std::string> ids = claim_ids(reports);
  EXPECT_TRUE(ids.count("corpus.hd_colength"));
  EXPECT_TRUE(ids.count("corpus.hd_multiplicity"));
  EXPECT_TRUE(ids.count("corpus.hd_e1"));
  EXPECT_TRUE(ids.count("corpus.adjoint_oracle"));
  EXPECT_TRUE(ids.count("corpus.briancon_skoda"));
  EXPECT_TRUE(ids.count("corpus.power_min_gens"));
  EXPECT_TRUE(ids.count("corpus.hd_mixed_e1"));
  EXPECT_TRUE(ids.count("corpus.mixed_e1_bilinear"));
  EXPECT_TRUE(ids.count("corpus.colength_product"));
  EXPECT_TRUE(ids.count("corpus.multiplicity_product"));

  std::set<std::int64_t> ideal_indices;
  for (const VerificationReport& r : reports) {
    if (r.claim_id == "corpus.hd_colength") {
      ideal_indices.insert(r.params.at("ideal"));
    }
  }
  EXPECT_EQ(6u, ideal_indices.size());
}

TEST(CorpusSuiteTest, CertificationHonorsTheThreshold) {
  CorpusRunOptions options;
  options.spec = {3, 6, 3, 8};
  options.pair_count = 2;
  options.r_max = 1;
  options.s_max = 1;
  options.certify_threshold = 0;
  const auto reports = verify_corpus(options);
  const std::set<std::string> ids = claim_ids(reports);
  EXPECT_FALSE(ids.count("corpus.joint_reduction_certificate"));
  EXPECT_FALSE(ids.count("corpus.rees_sally"));
}

TEST(CorpusSuiteTest, RejectsOversizedPairCounts) {
  CorpusRunOptions options;
  options.spec = {1, 4, 3, 8};
  options.pair_count = 3;
  EXPECT_THROW(
      {
        try {
          verify_corpus(options);
        } catch (const DomainError& e) {
          EXPECT_STREQ("corpus too small for requested pairs", e.what());
          throw;
        }
      },
      DomainError);
}

TEST(CorpusTest, DeterministicAndComplete) {
  const CorpusSpec spec{11, 12, 4, 10};
  const auto first = random_complete_ideals(spec);
  const auto second = random_complete_ideals(spec);
  ASSERT_EQ(12u, first.size());
  for (std::size_t t = 0; t < first.size(); ++t) {
    EXPECT_EQ(first[t], second[t]);
    EXPECT_TRUE(is_complete(first[t]));
    EXPECT_TRUE(first[t].is_m_primary());
    EXPECT_FALSE(first[t].is_unit());
    EXPECT_LE(first[t].order(), 4);
    EXPECT_LE(first[t].pure_x_exponent(), 10);
    EXPECT_LE(first[t].pure_y_exponent(), 10);
  }
}

TEST(RenderTest, TableAndJsonShapes) {
  VerificationReport pass;
  pass.claim_id = "demo.equal";
  pass.params = {{"n", 2}};
  pass.lhs = "5";
  pass.rhs = "5";
  pass.passed = true;
  VerificationReport fail;
  fail.claim_id = "demo.unequal";
  fail.lhs = "5";
  fail.rhs = "6";
  fail.passed = false;
  const std::vector<VerificationReport> reports = {pass, fail};

  const std::string table = render_table(reports);
  EXPECT_NE(std::string::npos, table.find("PASS  demo.equal [n=2]"));
  EXPECT_NE(std::string::npos, table.find("FAIL  demo.unequal"));
  EXPECT_NE(std::string::npos, table.find("2 claims, 1 failed\n"));

  const std::string json = render_json(reports);
  EXPECT_NE(std::string::npos, json.find("\"claim_id\": \"demo.equal\""));
  EXPECT_NE(std::string::npos, json.find("\"passed\": false"));
  EXPECT_NE(std::string::npos, json.find("\"n\": 2"));
  EXPECT_EQ('\n', json.back());
}

TEST(RenderTest, PointBasisTextAndJson) {
  const MonomialIdeal a({{2, 0}, {1, 1}, {0, 3}});
  const std::string text = render_point_basis(point_basis(a), false);
  EXPECT_NE(std::string::npos, text.find("root order=2 x^2,x*y,y^3"));
  EXPECT_NE(std::string::npos, text.find("  Y order=1 x,y"));
  const std::string json = render_point_basis(point_basis(a), true);
  EXPECT_NE(std::string::npos, json.find("\"path\": \"Y\""));
  EXPECT_NE(std::string::npos, json.find("\"order\": 2"));
}

}  // namespace
}  // namespace ideal2d
