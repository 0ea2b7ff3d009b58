#include "permahank/polynomial.hpp"

#include <algorithm>

namespace permahank {

RingContext::RingContext(std::vector<std::string> names, std::uint32_t characteristic,
                         std::size_t num_aux)
    : names_(std::move(names)), characteristic_(characteristic), num_aux_(num_aux) {}

Ring RingContext::make(std::size_t num_vars, std::uint32_t characteristic) {
  check_characteristic(characteristic);
  if (num_vars == 0 || num_vars > kMaxVars - 1) {
    throw std::invalid_argument("number of variables must be in 1.." +
                                std::to_string(kMaxVars - 1));
  }
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (std::size_t i = 1; i <= num_vars; ++i) names.push_back("x" + std::to_string(i));
  return Ring(new RingContext(std::move(names), characteristic, 0));
}

Ring RingContext::extended(const std::string& aux_name) const {
  if (names_.size() + 1 > kMaxVars) throw std::invalid_argument("too many variables");
  std::vector<std::string> names;
  names.reserve(names_.size() + 1);
  names.push_back(aux_name);
  names.insert(names.end(), names_.begin(), names_.end());
  return Ring(new RingContext(std::move(names), characteristic_, num_aux_ + 1));
}

int RingContext::var_index(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool same_ring(const Ring& a, const Ring& b) noexcept { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) {
    throw RingMismatch("ring mismatch: " + std::to_string(a->num_vars()) + " vars (char " +
                       std::to_string(a->characteristic()) + ") vs " +
                       std::to_string(b->num_vars()) + " vars (char " +
                       std::to_string(b->characteristic()) + ")");
  }
}

namespace detail {

std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b,
                        const FieldElement* c, const Monomial* m, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Term bj;
  auto load_b = [&]() {
    bj.monomial = m ? b[j].monomial * *m : b[j].monomial;
    bj.coeff = c ? b[j].coeff * *c : b[j].coeff;
  };
  if (j < b.size()) load_b();
  while (i < a.size() && j < b.size()) {
    const auto cmp = order.compare(a[i].monomial, bj.monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(bj));
      if (++j < b.size()) load_b();
    } else {
      FieldElement s = a[i].coeff + bj.coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(s), a[i].monomial});
      ++i;
      if (++j < b.size()) load_b();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (j < b.size()) {
    out.push_back(std::move(bj));
    if (++j < b.size()) load_b();
  }
  return out;
}

}  // namespace detail

using detail::merge_terms;

Polynomial::Polynomial(Ring ring, MonomialOrder order)
    : ring_(std::move(ring)), order_(order) {}

Polynomial::Polynomial(Ring ring, MonomialOrder order, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), order_(order), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms, MonomialOrder order) {
  for (const Term& t : terms) {
    if (t.monomial.size() != ring->num_vars()) {
      throw RingMismatch("monomial length does not match the ring");
    }
    if (t.coeff.characteristic() != ring->characteristic()) {
      throw RingMismatch("coefficient field does not match the ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), order, std::move(out));
}

Polynomial Polynomial::from_sorted_terms(Ring ring, std::vector<Term> terms,
                                         MonomialOrder order) {
  return Polynomial(std::move(ring), order, std::move(terms));
}

Polynomial Polynomial::constant(Ring ring, const FieldElement& c, MonomialOrder order) {
  const std::size_t n = ring->num_vars();
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back(Term{c, Monomial(n)});
  return from_terms(std::move(ring), std::move(terms), order);
}

Polynomial Polynomial::constant(Ring ring, long c, MonomialOrder order) {
  const FieldElement fc = ring->from_integer(c);
  return constant(std::move(ring), fc, order);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index, Monomial::Exponent power,
                                MonomialOrder order) {
  const Monomial m = Monomial::variable(ring->num_vars(), index, power);
  return monomial(std::move(ring), m, order);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, MonomialOrder order) {
  if (m.size() != ring->num_vars()) throw RingMismatch("monomial length does not match the ring");
  std::vector<Term> terms{Term{ring->one(), m}};
  return Polynomial(std::move(ring), order, std::move(terms));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::support() const noexcept {
  std::uint32_t s = 0;
  for (const Term& t : terms_) s |= t.monomial.support();
  return s;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  std::vector<Term> terms = terms_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return Polynomial(ring_, order, std::move(terms));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.coeff = -t.coeff;
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  if (other.order_ != order_) return *this += other.with_order(order_);
  terms_ = merge_terms(terms_, other.terms_, nullptr, nullptr, order_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  if (other.order_ != order_) return *this -= other.with_order(order_);
  const FieldElement minus_one = ring_->from_integer(-1);
  terms_ = merge_terms(terms_, other.terms_, &minus_one, nullptr, order_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (b.order_ != a.order_) return a * b.with_order(a.order_);
  const Polynomial& longer = a.size() >= b.size() ? a : b;
  const Polynomial& shorter = a.size() >= b.size() ? b : a;
  std::vector<Term> acc;
  for (const Term& t : shorter.terms_) {
    acc = merge_terms(acc, longer.terms_, &t.coeff, &t.monomial, a.order_);
  }
  return Polynomial(a.ring_, a.order_, std::move(acc));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.coeff *= c;
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::times_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back(Term{t.coeff * c, t.monomial * m});
  return Polynomial(ring_, order_, std::move(terms));
}

Polynomial Polynomial::minus_term_multiple(const FieldElement& c, const Monomial& m,
                                           const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const Polynomial& gg = g.order_ == order_ ? g : g.with_order(order_);
  const FieldElement neg = -c;
  return Polynomial(ring_, order_, merge_terms(terms_, gg.terms_, &neg, &m, order_));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1, order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.size() != b.size()) return false;
  if (a.order_ != b.order_) return a == b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

Polynomial lift_to_extended(const Polynomial& f, const Ring& extended,
                            const MonomialOrder& order) {
  const std::size_t shift = extended->num_vars() - f.ring()->num_vars();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m(extended->num_vars());
    for (std::size_t i = 0; i < t.monomial.size(); ++i) m.set(i + shift, t.monomial[i]);
    terms.push_back(Term{t.coeff, m});
  }
  return Polynomial::from_terms(extended, std::move(terms), order);
}

Polynomial project_from_extended(const Polynomial& f, const Ring& base,
                                 const MonomialOrder& order) {
  const std::size_t shift = f.ring()->num_vars() - base->num_vars();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m(base->num_vars());
    for (std::size_t i = 0; i < shift; ++i) {
      if (t.monomial[i] != 0) throw std::logic_error("auxiliary variable leaked into projection");
    }
    for (std::size_t i = 0; i < base->num_vars(); ++i) m.set(i, t.monomial[i + shift]);
    terms.push_back(Term{t.coeff, m});
  }
  return Polynomial::from_terms(base, std::move(terms), order);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Polynomial d = divisor.with_order(f.order());
  Polynomial rest = f;
  std::vector<Term> quotient;
  const FieldElement lc_inv = d.leading_coeff().inverse();
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!d.leading_monomial().divides(lt.monomial)) {
      throw std::logic_error("inexact polynomial division");
    }
    Term q{lt.coeff * lc_inv, lt.monomial / d.leading_monomial()};
    rest = rest.minus_term_multiple(q.coeff, q.monomial, d);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient), f.order());
}

}  // namespace permahank
