#include "ideal2d.h"

#include <gtest/gtest.h>

#include <cstring>
#include <string>

namespace {

struct Ideal {
  ideal2d_ideal* ptr = nullptr;
  ~Ideal() { ideal2d_ideal_free(ptr); }
};

struct Str {
  char* ptr = nullptr;
  ~Str() { ideal2d_string_free(ptr); }
  std::string get() const { return ptr == nullptr ? "" : ptr; }
};

Ideal parse_ok(const std::string& text) {
  Ideal a;
  EXPECT_EQ(IDEAL2D_OK, ideal2d_ideal_parse(text.c_str(), &a.ptr)) << text;
  return a;
}

std::string to_string_ok(const ideal2d_ideal* a) {
  Str s;
  EXPECT_EQ(IDEAL2D_OK, ideal2d_ideal_to_string(a, &s.ptr));
  return s.get();
}

TEST(CApiBasicsTest, VersionAndStringLifecycle) {
  ASSERT_NE(nullptr, ideal2d_version());
  EXPECT_STRNE("", ideal2d_version());
  ideal2d_string_free(nullptr);
  ideal2d_ideal_free(nullptr);
}

TEST(CApiBasicsTest, ParseAndRoundTrip) {
  const Ideal a = parse_ok("y^3, x^2, x*y, x^2*y");
  EXPECT_EQ("x^2,x*y,y^3", to_string_ok(a.ptr));
  int monomial = -1;
  EXPECT_EQ(IDEAL2D_OK, ideal2d_ideal_is_monomial(a.ptr, &monomial));
  EXPECT_EQ(1, monomial);

  const Ideal p = parse_ok("x^2+y^3, x*y");
  EXPECT_EQ("x^2+y^3,x*y", to_string_ok(p.ptr));
  EXPECT_EQ(IDEAL2D_OK, ideal2d_ideal_is_monomial(p.ptr, &monomial));
  EXPECT_EQ(0, monomial);
}

TEST(CApiBasicsTest, NullArgumentsAreReported) {
  ideal2d_ideal* out = nullptr;
  EXPECT_EQ(IDEAL2D_EARG, ideal2d_ideal_parse(nullptr, &out));
  EXPECT_STREQ("null argument", ideal2d_last_error());
  EXPECT_EQ(IDEAL2D_EARG, ideal2d_ideal_parse("x", nullptr));
  char* text = nullptr;
  EXPECT_EQ(IDEAL2D_EARG, ideal2d_ideal_to_string(nullptr, &text));
  EXPECT_EQ(nullptr, text);
  EXPECT_EQ(nullptr, out);
}

TEST(CApiBasicsTest, ErrorCodeMapping) {
  ideal2d_ideal* out = nullptr;
  EXPECT_EQ(IDEAL2D_EPARSE, ideal2d_ideal_parse("x^", &out));
  EXPECT_STREQ("expected an exponent (at position 2)", ideal2d_last_error());
  EXPECT_EQ(nullptr, out);

  const Ideal not_complete = parse_ok("x^4,y^3");
  ideal2d_ideal* core = nullptr;
  EXPECT_EQ(IDEAL2D_EDOMAIN, ideal2d_core(not_complete.ptr, &core));
  EXPECT_STREQ("core formula requires a complete ideal",
               ideal2d_last_error());

  const Ideal line = parse_ok("x");
  char* colength = nullptr;
  EXPECT_EQ(IDEAL2D_EDOMAIN, ideal2d_colength(line.ptr, 0, &colength));
  EXPECT_STREQ("infinite colength", ideal2d_last_error());

  const Ideal poly_line = parse_ok("x+y^2");
  EXPECT_EQ(IDEAL2D_ELIMIT, ideal2d_colength(poly_line.ptr, 6, &colength));
  EXPECT_STREQ("ideal not certified m-primary within cap",
               ideal2d_last_error());
  EXPECT_EQ(nullptr, colength);
}

TEST(CApiOperationsTest, ClosureAdjointCore) {
  const Ideal a = parse_ok("x^4,y^3");
  Ideal closed;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_closure(a.ptr, &closed.ptr));
  EXPECT_EQ("x^4,x^3*y,x^2*y^2,y^3", to_string_ok(closed.ptr));

  Ideal adj;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_adjoint(a.ptr, &adj.ptr));
  EXPECT_EQ("x^2,x*y,y^2", to_string_ok(adj.ptr));

  const Ideal i51 = parse_ok("x^2,x*y,y^3");
  Ideal c;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_core(i51.ptr, &c.ptr));
  EXPECT_EQ("x^3,x^2*y,x*y^2,y^4", to_string_ok(c.ptr));

  const Ideal poly = parse_ok("x^2+y^3,x*y");
  Ideal rejected;
  EXPECT_EQ(IDEAL2D_EDOMAIN, ideal2d_closure(poly.ptr, &rejected.ptr));
  EXPECT_STREQ("operation requires a monomial ideal", ideal2d_last_error());
  EXPECT_EQ(nullptr, rejected.ptr);
}

TEST(CApiOperationsTest, NumericalInvariants) {
  const Ideal i51 = parse_ok("x^2,x*y,y^3");
  Str lambda;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_colength(i51.ptr, 0, &lambda.ptr));
  EXPECT_EQ("4", lambda.get());

  Str e;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_multiplicity(i51.ptr, &e.ptr));
  EXPECT_EQ("5", e.get());

  const Ideal k51 = parse_ok("x^3,x*y,y^2");
  Str e1;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_mixed_e1(i51.ptr, k51.ptr, &e1.ptr));
  EXPECT_EQ("4", e1.get());

  const Ideal reduction = parse_ok("x^2+y^3,x*y");
  Str poly_lambda;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_colength(reduction.ptr, 0, &poly_lambda.ptr));
  EXPECT_EQ("5", poly_lambda.get());
}

TEST(CApiOperationsTest, PointBasisRendering) {
  const Ideal i51 = parse_ok("x^2,x*y,y^3");
  Str text;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_point_basis_render(i51.ptr, 0, &text.ptr));
  EXPECT_NE(std::string::npos, text.get().find("root order=2 x^2,x*y,y^3"));
  Str json;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_point_basis_render(i51.ptr, 1, &json.ptr));
  EXPECT_NE(std::string::npos, json.get().find("\"order\": 2"));
}

TEST(CApiVerifyTest, HdReport) {
  const Ideal i51 = parse_ok("x^2,x*y,y^3");
  Str out;
  int all_passed = 0;
  ASSERT_EQ(IDEAL2D_OK,
            ideal2d_verify_hd(i51.ptr, 0, &out.ptr, &all_passed));
  EXPECT_EQ(1, all_passed);
  EXPECT_NE(std::string::npos, out.get().find("hd.reconciliation"));
  EXPECT_NE(std::string::npos, out.get().find("1 claims, 0 failed"));
}

TEST(CApiVerifyTest, PairSuite) {
  const Ideal i51 = parse_ok("x^2,x*y,y^3");
  const Ideal k51 = parse_ok("x^3,x*y,y^2");
  Str out;
  int all_passed = 0;
  ASSERT_EQ(IDEAL2D_OK,
            ideal2d_verify_pair_suite("sec3", i51.ptr, k51.ptr, "x^2", "y^2",
                                      2, 2, 0, 0, &out.ptr, &all_passed));
  EXPECT_EQ(1, all_passed);
  EXPECT_NE(std::string::npos,
            out.get().find("sec3.joint_reduction_certificate"));

  Str unknown;
  EXPECT_EQ(IDEAL2D_EARG,
            ideal2d_verify_pair_suite("sec9", i51.ptr, k51.ptr, nullptr,
                                      nullptr, 1, 1, 0, 0, &unknown.ptr,
                                      &all_passed));
  EXPECT_STREQ("unknown suite", ideal2d_last_error());

  Str half;
  EXPECT_EQ(IDEAL2D_EARG,
            ideal2d_verify_pair_suite("sec3", i51.ptr, k51.ptr, "x^2", nullptr,
                                      1, 1, 0, 0, &half.ptr, &all_passed));
  EXPECT_STREQ("elements must be given together", ideal2d_last_error());
}

TEST(CApiVerifyTest, ExampleSuites) {
  Str out;
  int all_passed = 0;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_verify_example("ex51", 0, 2, 2, 3, 0, 1,
                                               &out.ptr, &all_passed));
  EXPECT_EQ(1, all_passed);
  EXPECT_NE(std::string::npos, out.get().find("\"claim_id\": \"ex51.colength\""));

  Str ex52;
  ASSERT_EQ(IDEAL2D_OK, ideal2d_verify_example("ex52", 3, 2, 2, 2, 0, 0,
                                               &ex52.ptr, &all_passed));
  EXPECT_EQ(1, all_passed);

  Str bad;
  EXPECT_EQ(IDEAL2D_EARG, ideal2d_verify_example("ex53", 0, 1, 1, 1, 0, 0,
                                                 &bad.ptr, &all_passed));
  EXPECT_STREQ("unknown example", ideal2d_last_error());

  Str small_u;
  EXPECT_EQ(IDEAL2D_EDOMAIN, ideal2d_verify_example("ex52", 2, 1, 1, 1, 0, 0,
                                                    &small_u.ptr, &all_passed));
  EXPECT_STREQ("u must be at least 3", ideal2d_last_error());
}

TEST(CApiVerifyTest, CorpusRun) {
  Str out;
  int all_passed = 0;
  ASSERT_EQ(IDEAL2D_OK,
            ideal2d_verify_corpus(3, 6, 2, 1, 1, 0, 48, 0, &out.ptr,
                                  &all_passed));
  EXPECT_EQ(1, all_passed);
  EXPECT_NE(std::string::npos, out.get().find("corpus.adjoint_oracle"));

  Str bad;
  EXPECT_EQ(IDEAL2D_EARG,
            ideal2d_verify_corpus(3, -1, 1, 1, 1, 0, 48, 0, &bad.ptr,
                                  &all_passed));

  Str oversized;
  EXPECT_EQ(IDEAL2D_EDOMAIN,
            ideal2d_verify_corpus(3, 4, 3, 1, 1, 0, 48, 0, &oversized.ptr,
                                  &all_passed));
  EXPECT_STREQ("corpus too small for requested pairs", ideal2d_last_error());
}

TEST(CApiVerifyTest, FailuresAreReportedNotThrown) {
  const Ideal i51 = parse_ok("x^2,x*y,y^3");
  const Ideal k51 = parse_ok("x^3,x*y,y^2");
  Str out;
  int all_passed = 1;
  ASSERT_EQ(IDEAL2D_OK,
            ideal2d_verify_pair_suite("sec3", i51.ptr, k51.ptr, "x^2",
                                      "y^3", 1, 1, 0, 0, &out.ptr,
                                      &all_passed));
  EXPECT_EQ(0, all_passed);
  EXPECT_NE(std::string::npos, out.get().find("FAIL"));
}

}  // namespace
