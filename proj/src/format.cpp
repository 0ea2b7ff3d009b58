#include "permahank/format.hpp"

#include <cctype>

namespace permahank {

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = f.ring();
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    mpq_class c = t.coeff.representative();
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += ring->var_name(i);
      if (e > 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += factors;
    } else {
      out += c.get_str() + '*' + factors;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, MonomialOrder order)
      : text_(text), ring_(ring), order_(order) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) fail("empty input");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      advance();
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms), order_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Term term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    mpq_class coeff(1);
    Monomial mono(ring_->num_vars());
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den(1);
      skip_ws();
      if (!at_end() && peek() == '/') {
        advance();
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      skip_ws();
      if (!at_end() && peek() == '*') {
        advance();
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      factor(mono);
      while (true) {
        skip_ws();
        if (at_end() || peek() != '*') break;
        advance();
        factor(mono);
      }
    }
    if (negative) coeff = -coeff;
    FieldElement fc;
    try {
      fc = FieldElement::from_rational(coeff, ring_->characteristic());
    } catch (const FieldError& e) {
      fail(e.what());
    }
    return Term{std::move(fc), mono};
  }

  void factor(Monomial& mono) {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || peek() != 'x') {
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) advance();
      if (start == pos_) fail("expected a variable");
      throw ParseError("unknown variable '" + std::string(text_.substr(start, pos_ - start)) + "'",
                       start);
    }
    advance();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a variable index after 'x'");
    }
    const mpz_class index = integer();
    if (index < 1) throw ParseError("variable index must be positive", start);
    if (index > static_cast<unsigned long>(ring_->num_vars() - ring_->num_aux())) {
      throw ParseError("variable x" + index.get_str() + " exceeds the ring's " +
                           std::to_string(ring_->num_vars() - ring_->num_aux()) + " variables",
                       start);
    }
    mpz_class power(1);
    skip_ws();
    if (!at_end() && peek() == '^') {
      advance();
      power = integer();
    }
    const std::size_t slot = ring_->num_aux() + index.get_ui() - 1;
    const unsigned long total = mono[slot] + power.get_ui();
    if (power > 65535 || total > 65535) throw ParseError("exponent too large", start);
    mono.set(slot, static_cast<Monomial::Exponent>(total));
  }

  std::string_view text_;
  const Ring& ring_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const Ring& ring, MonomialOrder order) {
  return Parser(text, ring, order).run();
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const Ring& ring,
                                  MonomialOrder order) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse(t, ring, order));
  return out;
}

std::vector<std::string> format_all(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(format(p));
  return out;
}

}  // namespace permahank
