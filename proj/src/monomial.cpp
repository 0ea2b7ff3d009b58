#include "permahank/monomial.hpp"

#include <algorithm>
#include <limits>

namespace permahank {

namespace {

Monomial::Exponent checked_exponent(std::uint32_t e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max()) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) : num_vars_(static_cast<std::uint8_t>(num_vars)) {
  if (num_vars > kMaxVars) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  if (i >= num_vars_) throw std::out_of_range("variable index out of range");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
  if (e != 0) {
    support_ |= (1U << i);
  } else {
    support_ &= ~(1U << i);
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.num_vars_);
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    r.exps_[i] = checked_exponent(std::uint32_t{a.exps_[i]} + b.exps_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.num_vars_);
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
    if (r.exps_[i] != 0) r.support_ |= (1U << i);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.num_vars_);
  for (std::size_t i = 0; i < a.num_vars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  r.support_ = a.support_ | b.support_;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = num_vars_;
  for (std::size_t i = 0; i < num_vars_; ++i) h = h * 1000003U ^ exps_[i];
  return h;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "deglex") return deglex();
  if (name.starts_with("elim(") && name.ends_with(")")) {
    const int k = std::stoi(name.substr(5, name.size() - 6));
    if (k < 0 || k > static_cast<int>(kMaxVars)) throw std::invalid_argument("bad block size");
    return elimination(static_cast<std::uint8_t>(k));
  }
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::deglex:
      return "deglex";
    case Kind::elim:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace permahank
