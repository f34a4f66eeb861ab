#include "ideal2d/text.hpp"

#include <cctype>
#include <vector>

namespace ideal2d {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  // polynomial := ['+'|'-'] term (('+'|'-') term)*
  LocalPolynomial parse_polynomial() {
    LocalPolynomial out;
    skip_spaces();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (take() == '-');
    out = out + parse_term(negative);
    skip_spaces();
    while (peek() == '+' || peek() == '-') {
      negative = (take() == '-');
      out = out + parse_term(negative);
      skip_spaces();
    }
    return out;
  }

  std::vector<LocalPolynomial> parse_generators() {
    std::vector<LocalPolynomial> gens;
    while (true) {
      std::size_t start = pos_;
      skip_spaces();
      if (at_end() || peek() == ',') fail("expected a generator", pos_);
      LocalPolynomial g = parse_polynomial();
      if (g.is_zero()) fail("zero generator", start);
      gens.push_back(std::move(g));
      skip_spaces();
      if (at_end()) break;
      if (take() != ',') fail("expected ',' between generators", pos_ - 1);
    }
    return gens;
  }

  void expect_end() {
    skip_spaces();
    if (!at_end()) fail("unexpected trailing input", pos_);
  }

 private:
  // term := coefficient ['*' factors] | factors
  LocalPolynomial parse_term(bool negative) {
    skip_spaces();
    Rat coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(peek_raw())) {
      coeff = parse_rational();
      has_coeff = true;
    }
    Exponent e{0, 0};
    skip_spaces();
    bool has_factors = false;
    if (has_coeff) {
      if (peek() == '*') {
        take();
        skip_spaces();
        if (peek() != 'x' && peek() != 'y') {
          fail("expected a variable after '*'", pos_);
        }
        has_factors = true;
        parse_factors(e);
      }
    } else if (peek() == 'x' || peek() == 'y') {
      has_factors = true;
      parse_factors(e);
    }
    if (!has_coeff && !has_factors) {
      fail("expected a term", pos_);
    }
    if (negative) coeff = -coeff;
    return LocalPolynomial::monomial(e, coeff);
  }

  // factors := factor (['*'] factor)*
  void parse_factors(Exponent& e) {
    parse_factor(e);
    while (true) {
      skip_spaces();
      std::size_t mark = pos_;
      if (peek() == '*') {
        take();
        skip_spaces();
        if (peek() != 'x' && peek() != 'y') {
          fail("expected a variable after '*'", pos_);
        }
        parse_factor(e);
      } else if (peek() == 'x' || peek() == 'y') {
        parse_factor(e);
      } else {
        pos_ = mark;
        break;
      }
    }
  }

  void parse_factor(Exponent& e) {
    skip_spaces();
    char v = take();
    check_internal(v == 'x' || v == 'y', "factor does not start a variable");
    std::int64_t exp = 1;
    if (peek() == '^') {
      take();
      skip_spaces();
      if (!std::isdigit(peek_raw())) fail("expected an exponent", pos_);
      exp = parse_natural();
    }
    if (v == 'x') {
      e.i += exp;
    } else {
      e.j += exp;
    }
  }

  Rat parse_rational() {
    std::int64_t num = parse_natural();
    if (peek() == '/') {
      take();
      skip_spaces();
      if (!std::isdigit(peek_raw())) fail("expected a denominator", pos_);
      std::size_t den_pos = pos_;
      std::int64_t den = parse_natural();
      if (den == 0) fail("zero denominator", den_pos);
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  std::int64_t parse_natural() {
    skip_spaces();
    std::size_t start = pos_;
    std::int64_t value = 0;
    while (std::isdigit(peek_raw())) {
      value = value * 10 + (take() - '0');
      if (value > (std::int64_t(1) << 40)) {
        fail("number out of range", start);
      }
    }
    check_internal(pos_ > start, "parse_natural called off a digit");
    return value;
  }

  void skip_spaces() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  // Peeks past spaces without consuming them.
  char peek() {
    skip_spaces();
    return at_end() ? '\0' : text_[pos_];
  }

  // Peeks the raw next character (after a prior skip_spaces).
  char peek_raw() const { return at_end() ? '\0' : text_[pos_]; }

  char take() {
    skip_spaces();
    if (at_end()) fail("unexpected end of input", pos_);
    return text_[pos_++];
  }

  [[noreturn]] void fail(const std::string& what, std::size_t where) const {
    throw ParseError(what, where);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedIdeal parse_ideal(const std::string& text) {
  Parser parser(text);
  std::vector<LocalPolynomial> gens = parser.parse_generators();
  parser.expect_end();

  bool all_single_terms = true;
  for (const LocalPolynomial& g : gens) {
    if (g.terms().size() != 1) {
      all_single_terms = false;
      break;
    }
  }
  ParsedIdeal out;
  if (all_single_terms) {
    // A single-term generator spans the same ideal as its monomial.
    std::vector<Exponent> exps;
    exps.reserve(gens.size());
    for (const LocalPolynomial& g : gens) {
      exps.push_back(g.terms().begin()->first);
    }
    out.monomial = MonomialIdeal(std::move(exps));
  } else {
    out.polynomial = PolynomialIdeal(std::move(gens));
  }
  return out;
}

LocalPolynomial parse_polynomial(const std::string& text) {
  Parser parser(text);
  LocalPolynomial out = parser.parse_polynomial();
  parser.expect_end();
  if (out.is_zero()) throw ParseError("zero polynomial", 0);
  return out;
}

}  // namespace ideal2d
