// Command-line front end; talks to the library exclusively through the C
// interface in ideal2d.h. Exit codes: 0 success (and, for verify, every
// claim passed), 1 verify ran but a claim failed, 2 any error.
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "ideal2d.h"

namespace {

struct IdealHandle {
  ideal2d_ideal* ptr = nullptr;
  IdealHandle() = default;
  IdealHandle(const IdealHandle&) = delete;
  IdealHandle& operator=(const IdealHandle&) = delete;
  ~IdealHandle() { ideal2d_ideal_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  StringHandle() = default;
  StringHandle(const StringHandle&) = delete;
  StringHandle& operator=(const StringHandle&) = delete;
  ~StringHandle() { ideal2d_string_free(ptr); }
};

int fail() {
  std::fprintf(stderr, "error: %s\n", ideal2d_last_error());
  return 2;
}

int parse_ideal_arg(const std::string& text, IdealHandle& out) {
  if (ideal2d_ideal_parse(text.c_str(), &out.ptr) != IDEAL2D_OK) return fail();
  return 0;
}

int close_in_place(IdealHandle& ideal) {
  IdealHandle closed;
  if (ideal2d_closure(ideal.ptr, &closed.ptr) != IDEAL2D_OK) return fail();
  std::swap(ideal.ptr, closed.ptr);
  return 0;
}

int print_ideal(const ideal2d_ideal* a) {
  StringHandle text;
  if (ideal2d_ideal_to_string(a, &text.ptr) != IDEAL2D_OK) return fail();
  std::printf("%s\n", text.ptr);
  return 0;
}

int run_unary(const std::string& text,
              ideal2d_status (*op)(const ideal2d_ideal*, ideal2d_ideal**)) {
  IdealHandle in;
  if (int rc = parse_ideal_arg(text, in)) return rc;
  IdealHandle result;
  if (op(in.ptr, &result.ptr) != IDEAL2D_OK) return fail();
  return print_ideal(result.ptr);
}

int run_colength(const std::string& text, std::int64_t cap) {
  IdealHandle in;
  if (int rc = parse_ideal_arg(text, in)) return rc;
  StringHandle value;
  if (ideal2d_colength(in.ptr, cap, &value.ptr) != IDEAL2D_OK) return fail();
  std::printf("%s\n", value.ptr);
  return 0;
}

int run_multiplicity(const std::string& text) {
  IdealHandle in;
  if (int rc = parse_ideal_arg(text, in)) return rc;
  StringHandle value;
  if (ideal2d_multiplicity(in.ptr, &value.ptr) != IDEAL2D_OK) return fail();
  std::printf("%s\n", value.ptr);
  return 0;
}

int run_mixed_e1(const std::string& text_a, const std::string& text_b) {
  IdealHandle a;
  IdealHandle b;
  if (int rc = parse_ideal_arg(text_a, a)) return rc;
  if (int rc = parse_ideal_arg(text_b, b)) return rc;
  StringHandle value;
  if (ideal2d_mixed_e1(a.ptr, b.ptr, &value.ptr) != IDEAL2D_OK) return fail();
  std::printf("%s\n", value.ptr);
  return 0;
}

int run_point_basis(const std::string& text, bool as_json) {
  IdealHandle in;
  if (int rc = parse_ideal_arg(text, in)) return rc;
  StringHandle rendered;
  if (ideal2d_point_basis_render(in.ptr, as_json ? 1 : 0, &rendered.ptr) !=
      IDEAL2D_OK)
    return fail();
  std::fputs(rendered.ptr, stdout);
  return 0;
}

int print_reports(const StringHandle& rendered, int all_passed) {
  std::fputs(rendered.ptr, stdout);
  return all_passed ? 0 : 1;
}

int run_verify_hd(const std::string& text, bool close_first, bool as_json) {
  IdealHandle in;
  if (int rc = parse_ideal_arg(text, in)) return rc;
  if (close_first) {
    if (int rc = close_in_place(in)) return rc;
  }
  StringHandle rendered;
  int all_passed = 0;
  if (ideal2d_verify_hd(in.ptr, as_json ? 1 : 0, &rendered.ptr,
                        &all_passed) != IDEAL2D_OK)
    return fail();
  return print_reports(rendered, all_passed);
}

struct PairSuiteArgs {
  std::string ideal;
  std::string ideal2;
  std::string elem_a;
  std::string elem_b;
  std::int64_t r_max = 3;
  std::int64_t s_max = 3;
  std::int64_t cap = 0;
  bool close_first = false;
  bool as_json = false;
};

int run_pair_suite(const char* suite, const PairSuiteArgs& args) {
  IdealHandle a;
  if (int rc = parse_ideal_arg(args.ideal, a)) return rc;
  IdealHandle b;
  if (int rc =
          parse_ideal_arg(args.ideal2.empty() ? args.ideal : args.ideal2, b))
    return rc;
  if (args.close_first) {
    if (int rc = close_in_place(a)) return rc;
    if (int rc = close_in_place(b)) return rc;
  }
  const bool with_elements = !args.elem_a.empty() || !args.elem_b.empty();
  StringHandle rendered;
  int all_passed = 0;
  if (ideal2d_verify_pair_suite(
          suite, a.ptr, b.ptr, with_elements ? args.elem_a.c_str() : nullptr,
          with_elements ? args.elem_b.c_str() : nullptr, args.r_max,
          args.s_max, args.cap, args.as_json ? 1 : 0, &rendered.ptr,
          &all_passed) != IDEAL2D_OK)
    return fail();
  return print_reports(rendered, all_passed);
}

struct ExampleArgs {
  std::int64_t u = 3;
  std::int64_t r_max = 3;
  std::int64_t s_max = 3;
  std::int64_t n_max = 3;
  std::int64_t cap = 0;
  bool as_json = false;
};

int run_example(const char* example, const ExampleArgs& args) {
  StringHandle rendered;
  int all_passed = 0;
  if (ideal2d_verify_example(example, args.u, args.r_max, args.s_max,
                             args.n_max, args.cap, args.as_json ? 1 : 0,
                             &rendered.ptr, &all_passed) != IDEAL2D_OK)
    return fail();
  return print_reports(rendered, all_passed);
}

struct CorpusArgs {
  std::uint64_t seed = 1;
  std::int64_t count = 200;
  std::int64_t pairs = 50;
  std::int64_t r_max = 3;
  std::int64_t s_max = 3;
  std::int64_t cap = 0;
  std::int64_t threshold = 48;
  bool as_json = false;
};

int run_corpus(const CorpusArgs& args) {
  StringHandle rendered;
  int all_passed = 0;
  if (ideal2d_verify_corpus(args.seed, args.count, args.pairs, args.r_max,
                            args.s_max, args.cap, args.threshold,
                            args.as_json ? 1 : 0, &rendered.ptr,
                            &all_passed) != IDEAL2D_OK)
    return fail();
  return print_reports(rendered, all_passed);
}

void add_ideal_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--ideal", target, "generators, e.g. \"x^2,x*y,y^3\"")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with m-primary monomial ideals in two "
               "variables: closures, adjoints, cores, multiplicities, and "
               "verification suites"};
  app.set_version_flag("--version", std::string(ideal2d_version()));
  app.require_subcommand(1);
  int rc = 0;

  std::string closure_ideal;
  auto* closure_cmd =
      app.add_subcommand("closure", "integral closure of a monomial ideal");
  add_ideal_option(closure_cmd, closure_ideal);
  closure_cmd->callback(
      [&] { rc = run_unary(closure_ideal, ideal2d_closure); });

  std::string adjoint_ideal;
  auto* adjoint_cmd =
      app.add_subcommand("adjoint", "adjoint of a monomial ideal");
  add_ideal_option(adjoint_cmd, adjoint_ideal);
  adjoint_cmd->callback(
      [&] { rc = run_unary(adjoint_ideal, ideal2d_adjoint); });

  std::string core_ideal;
  auto* core_cmd =
      app.add_subcommand("core", "core of a complete m-primary monomial ideal");
  add_ideal_option(core_cmd, core_ideal);
  core_cmd->callback([&] { rc = run_unary(core_ideal, ideal2d_core); });

  std::string colength_ideal;
  std::int64_t colength_cap = 0;
  auto* colength_cmd =
      app.add_subcommand("colength", "colength of an m-primary ideal");
  add_ideal_option(colength_cmd, colength_ideal);
  colength_cmd->add_option("--nmax", colength_cap,
                           "truncation cap for polynomial ideals");
  colength_cmd->callback(
      [&] { rc = run_colength(colength_ideal, colength_cap); });

  std::string mult_ideal;
  auto* mult_cmd = app.add_subcommand(
      "multiplicity", "multiplicity of an m-primary monomial ideal");
  add_ideal_option(mult_cmd, mult_ideal);
  mult_cmd->callback([&] { rc = run_multiplicity(mult_ideal); });

  std::string mixed_ideal;
  std::string mixed_ideal2;
  auto* mixed_cmd = app.add_subcommand(
      "mixed-e1", "mixed multiplicity of two m-primary monomial ideals");
  add_ideal_option(mixed_cmd, mixed_ideal);
  mixed_cmd->add_option("--ideal2", mixed_ideal2, "second ideal")->required();
  mixed_cmd->callback([&] { rc = run_mixed_e1(mixed_ideal, mixed_ideal2); });

  std::string pb_ideal;
  bool pb_json = false;
  auto* pb_cmd = app.add_subcommand(
      "point-basis", "point-basis tree of an m-primary monomial ideal");
  add_ideal_option(pb_cmd, pb_ideal);
  pb_cmd->add_flag("--json", pb_json, "render as JSON");
  pb_cmd->callback([&] { rc = run_point_basis(pb_ideal, pb_json); });

  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);

  std::string hd_ideal;
  bool hd_close = false;
  bool hd_json = false;
  auto* hd_cmd = verify_cmd->add_subcommand(
      "hd", "reconcile point-basis sums with colength and multiplicity");
  add_ideal_option(hd_cmd, hd_ideal);
  hd_cmd->add_flag("--closure", hd_close, "replace the input by its closure");
  hd_cmd->add_flag("--json", hd_json, "render as JSON");
  hd_cmd->callback([&] { rc = run_verify_hd(hd_ideal, hd_close, hd_json); });

  PairSuiteArgs sec3_args;
  auto* sec3_cmd = verify_cmd->add_subcommand(
      "sec3", "adjoint identities for a pair of complete ideals");
  PairSuiteArgs sec4_args;
  auto* sec4_cmd = verify_cmd->add_subcommand(
      "sec4", "core identities for a pair of complete ideals");
  const std::pair<CLI::App*, PairSuiteArgs*> pair_cmds[] = {
      {sec3_cmd, &sec3_args}, {sec4_cmd, &sec4_args}};
  for (const auto& [cmd, args] : pair_cmds) {
    add_ideal_option(cmd, args->ideal);
    cmd->add_option("--ideal2", args->ideal2,
                    "second ideal (defaults to --ideal)");
    auto* opt_a = cmd->add_option("--a", args->elem_a,
                                  "first joint-reduction element");
    auto* opt_b = cmd->add_option("--b", args->elem_b,
                                  "second joint-reduction element");
    opt_a->needs(opt_b);
    opt_b->needs(opt_a);
    cmd->add_option("--r", args->r_max, "largest power of the first ideal");
    cmd->add_option("--s", args->s_max, "largest power of the second ideal");
    cmd->add_option("--nmax", args->cap, "truncation cap for certificates");
    cmd->add_flag("--closure", args->close_first,
                  "replace the inputs by their closures");
    cmd->add_flag("--json", args->as_json, "render as JSON");
  }
  sec3_cmd->callback([&] { rc = run_pair_suite("sec3", sec3_args); });
  sec4_cmd->callback([&] { rc = run_pair_suite("sec4", sec4_args); });

  ExampleArgs ex51_args;
  ex51_args.r_max = 4;
  ex51_args.s_max = 4;
  ex51_args.n_max = 8;
  auto* ex51_cmd = verify_cmd->add_subcommand(
      "ex51", "first worked example family");
  ex51_cmd->add_option("--r", ex51_args.r_max, "largest power of I");
  ex51_cmd->add_option("--s", ex51_args.s_max, "largest power of K");
  ex51_cmd->add_option("--n", ex51_args.n_max, "largest adjoint power");
  ex51_cmd->add_option("--nmax", ex51_args.cap,
                       "truncation cap for certificates");
  ex51_cmd->add_flag("--json", ex51_args.as_json, "render as JSON");
  ex51_cmd->callback([&] { rc = run_example("ex51", ex51_args); });

  ExampleArgs ex52_args;
  auto* ex52_cmd = verify_cmd->add_subcommand(
      "ex52", "second worked example family, parametric in u");
  ex52_cmd->add_option("--u", ex52_args.u, "family parameter, at least 3");
  ex52_cmd->add_option("--r", ex52_args.r_max, "largest power of I");
  ex52_cmd->add_option("--s", ex52_args.s_max, "largest power of K");
  ex52_cmd->add_option("--n", ex52_args.n_max, "largest adjoint power");
  ex52_cmd->add_option("--nmax", ex52_args.cap,
                       "truncation cap for certificates");
  ex52_cmd->add_flag("--json", ex52_args.as_json, "render as JSON");
  ex52_cmd->callback([&] { rc = run_example("ex52", ex52_args); });

  CorpusArgs corpus_args;
  auto* corpus_cmd = verify_cmd->add_subcommand(
      "corpus", "randomized corpus of complete ideals");
  corpus_cmd->add_option("--seed", corpus_args.seed, "corpus seed");
  corpus_cmd->add_option("--count", corpus_args.count, "number of ideals");
  corpus_cmd->add_option("--pairs", corpus_args.pairs, "number of pairs");
  corpus_cmd->add_option("--r", corpus_args.r_max,
                         "largest power of the first ideal of a pair");
  corpus_cmd->add_option("--s", corpus_args.s_max,
                         "largest power of the second ideal of a pair");
  corpus_cmd->add_option("--nmax", corpus_args.cap,
                         "truncation cap for certificates");
  corpus_cmd->add_option("--threshold", corpus_args.threshold,
                         "largest mixed multiplicity certified exactly");
  corpus_cmd->add_flag("--json", corpus_args.as_json, "render as JSON");
  corpus_cmd->callback([&] { rc = run_corpus(corpus_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
