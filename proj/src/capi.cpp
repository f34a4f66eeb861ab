#include "ideal2d.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "ideal2d/adjoint.hpp"
#include "ideal2d/errors.hpp"
#include "ideal2d/localring.hpp"
#include "ideal2d/newton.hpp"
#include "ideal2d/report.hpp"
#include "ideal2d/staircase.hpp"
#include "ideal2d/text.hpp"
#include "ideal2d/transforms.hpp"
#include "ideal2d/verify.hpp"

struct ideal2d_ideal {
  ideal2d::ParsedIdeal parsed;
};

namespace {

thread_local std::string g_last_error;

ideal2d_status arg_error(const char* message) {
  g_last_error = message;
  return IDEAL2D_EARG;
}

template <typename F>
ideal2d_status guarded(F&& body) {
  try {
    return body();
  } catch (const ideal2d::ParseError& e) {
    g_last_error = e.what();
    return IDEAL2D_EPARSE;
  } catch (const ideal2d::DomainError& e) {
    g_last_error = e.what();
    return IDEAL2D_EDOMAIN;
  } catch (const ideal2d::LimitError& e) {
    g_last_error = e.what();
    return IDEAL2D_ELIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IDEAL2D_EINTERNAL;
  }
}

ideal2d_status write_string(const std::string& s, char** out) {
  char* copy = static_cast<char*>(std::malloc(s.size() + 1));
  if (copy == nullptr) {
    g_last_error = "allocation failed";
    return IDEAL2D_EINTERNAL;
  }
  std::memcpy(copy, s.c_str(), s.size() + 1);
  *out = copy;
  return IDEAL2D_OK;
}

ideal2d_status write_ideal(ideal2d::ParsedIdeal parsed, ideal2d_ideal** out) {
  *out = new ideal2d_ideal{std::move(parsed)};
  return IDEAL2D_OK;
}

ideal2d_status write_monomial(ideal2d::MonomialIdeal a, ideal2d_ideal** out) {
  ideal2d::ParsedIdeal parsed;
  parsed.monomial = std::move(a);
  return write_ideal(std::move(parsed), out);
}

const ideal2d::MonomialIdeal& require_monomial(const ideal2d_ideal* a) {
  if (!a->parsed.monomial)
    throw ideal2d::DomainError("operation requires a monomial ideal");
  return *a->parsed.monomial;
}

std::int64_t effective_cap(int64_t cap) {
  return cap > 0 ? cap : ideal2d::kDefaultTruncationCap;
}

ideal2d_status write_reports(
    const std::vector<ideal2d::VerificationReport>& reports, int as_json,
    char** out, int* all_passed_out) {
  if (all_passed_out != nullptr)
    *all_passed_out = ideal2d::all_passed(reports) ? 1 : 0;
  return write_string(
      as_json ? ideal2d::render_json(reports) : ideal2d::render_table(reports),
      out);
}

}  // namespace

extern "C" {

const char* ideal2d_version(void) { return "1.0.0"; }

const char* ideal2d_last_error(void) { return g_last_error.c_str(); }

void ideal2d_string_free(char* s) { std::free(s); }

void ideal2d_ideal_free(ideal2d_ideal* a) { delete a; }

ideal2d_status ideal2d_ideal_parse(const char* text, ideal2d_ideal** out) {
  if (text == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] { return write_ideal(ideal2d::parse_ideal(text), out); });
}

ideal2d_status ideal2d_ideal_to_string(const ideal2d_ideal* a, char** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const std::string text = a->parsed.monomial
                                 ? a->parsed.monomial->to_string()
                                 : a->parsed.polynomial->to_string();
    return write_string(text, out);
  });
}

ideal2d_status ideal2d_ideal_is_monomial(const ideal2d_ideal* a, int* out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  *out = a->parsed.monomial ? 1 : 0;
  return IDEAL2D_OK;
}

ideal2d_status ideal2d_closure(const ideal2d_ideal* a, ideal2d_ideal** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    return write_monomial(ideal2d::integral_closure(require_monomial(a)), out);
  });
}

ideal2d_status ideal2d_adjoint(const ideal2d_ideal* a, ideal2d_ideal** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    return write_monomial(ideal2d::adjoint(require_monomial(a)), out);
  });
}

ideal2d_status ideal2d_core(const ideal2d_ideal* a, ideal2d_ideal** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    return write_monomial(ideal2d::core(require_monomial(a)), out);
  });
}

ideal2d_status ideal2d_colength(const ideal2d_ideal* a, int64_t cap,
                                char** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const ideal2d::Int value =
        a->parsed.monomial
            ? a->parsed.monomial->colength()
            : ideal2d::colength_poly(*a->parsed.polynomial, effective_cap(cap));
    return write_string(value.get_str(), out);
  });
}

ideal2d_status ideal2d_multiplicity(const ideal2d_ideal* a, char** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    return write_string(ideal2d::multiplicity(require_monomial(a)).get_str(),
                        out);
  });
}

ideal2d_status ideal2d_mixed_e1(const ideal2d_ideal* a, const ideal2d_ideal* b,
                                char** out) {
  if (a == nullptr || b == nullptr || out == nullptr)
    return arg_error("null argument");
  return guarded([&] {
    const ideal2d::Int value =
        ideal2d::mixed_e1(require_monomial(a), require_monomial(b));
    return write_string(value.get_str(), out);
  });
}

ideal2d_status ideal2d_point_basis_render(const ideal2d_ideal* a, int as_json,
                                          char** out) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const ideal2d::PointBasisNode tree =
        ideal2d::point_basis(require_monomial(a));
    return write_string(ideal2d::render_point_basis(tree, as_json != 0), out);
  });
}

ideal2d_status ideal2d_verify_hd(const ideal2d_ideal* a, int as_json,
                                 char** out, int* all_passed) {
  if (a == nullptr || out == nullptr) return arg_error("null argument");
  return guarded([&] {
    const std::vector<ideal2d::VerificationReport> reports = {
        ideal2d::verify_hd(require_monomial(a))};
    return write_reports(reports, as_json, out, all_passed);
  });
}

ideal2d_status ideal2d_verify_pair_suite(const char* suite,
                                         const ideal2d_ideal* a,
                                         const ideal2d_ideal* b,
                                         const char* elem_a,
                                         const char* elem_b, int64_t r_max,
                                         int64_t s_max, int64_t cap,
                                         int as_json, char** out,
                                         int* all_passed) {
  if (suite == nullptr || a == nullptr || b == nullptr || out == nullptr)
    return arg_error("null argument");
  const std::string name = suite;
  if (name != "sec3" && name != "sec4") return arg_error("unknown suite");
  if ((elem_a == nullptr) != (elem_b == nullptr))
    return arg_error("elements must be given together");
  return guarded([&] {
    ideal2d::PairSuiteOptions options;
    options.r_max = r_max;
    options.s_max = s_max;
    options.cap = effective_cap(cap);
    if (elem_a != nullptr) {
      options.elements = {ideal2d::parse_polynomial(elem_a),
                          ideal2d::parse_polynomial(elem_b)};
    }
    const std::vector<ideal2d::VerificationReport> reports =
        name == "sec3"
            ? ideal2d::verify_sec3(require_monomial(a), require_monomial(b),
                                   options)
            : ideal2d::verify_sec4(require_monomial(a), require_monomial(b),
                                   options);
    return write_reports(reports, as_json, out, all_passed);
  });
}

ideal2d_status ideal2d_verify_example(const char* example, int64_t u,
                                      int64_t r_max, int64_t s_max,
                                      int64_t n_max, int64_t cap, int as_json,
                                      char** out, int* all_passed) {
  if (example == nullptr || out == nullptr) return arg_error("null argument");
  const std::string name = example;
  if (name != "ex51" && name != "ex52") return arg_error("unknown example");
  return guarded([&] {
    const std::vector<ideal2d::VerificationReport> reports =
        name == "ex51"
            ? ideal2d::verify_ex51(r_max, s_max, n_max, effective_cap(cap))
            : ideal2d::verify_ex52(u, r_max, s_max, n_max, effective_cap(cap));
    return write_reports(reports, as_json, out, all_passed);
  });
}

ideal2d_status ideal2d_verify_corpus(uint64_t seed, int64_t count,
                                     int64_t pair_count, int64_t r_max,
                                     int64_t s_max, int64_t cap,
                                     int64_t certify_threshold, int as_json,
                                     char** out, int* all_passed) {
  if (out == nullptr) return arg_error("null argument");
  if (count < 0) return arg_error("count must be non-negative");
  return guarded([&] {
    ideal2d::CorpusRunOptions options;
    options.spec.seed = seed;
    options.spec.count = count;
    options.pair_count = pair_count;
    options.r_max = r_max;
    options.s_max = s_max;
    options.cap = effective_cap(cap);
    options.certify_threshold = certify_threshold;
    const std::vector<ideal2d::VerificationReport> reports =
        ideal2d::verify_corpus(options);
    return write_reports(reports, as_json, out, all_passed);
  });
}

}  // extern "C"
