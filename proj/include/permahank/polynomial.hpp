#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "permahank/field.hpp"
#include "permahank/monomial.hpp"

namespace permahank {

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Thrown when operands live in different polynomial rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// K[x1..xN], K = Q (characteristic 0) or F_p with p an odd prime.
/// Extended rings carry auxiliary variables ahead of x1, so they outrank
/// every x-variable.
class RingContext {
 public:
  static Ring make(std::size_t num_vars, std::uint32_t characteristic = 0);

  /// Same field, with one extra variable of highest priority.
  Ring extended(const std::string& aux_name) const;

  std::size_t num_vars() const noexcept { return names_.size(); }
  std::size_t num_aux() const noexcept { return num_aux_; }
  std::uint32_t characteristic() const noexcept { return characteristic_; }
  const std::string& var_name(std::size_t i) const { return names_.at(i); }
  /// Index of a named variable, or -1.
  int var_index(const std::string& name) const;

  FieldElement zero() const { return FieldElement::from_integer(0, characteristic_); }
  FieldElement one() const { return FieldElement::from_integer(1, characteristic_); }
  FieldElement from_integer(long v) const { return FieldElement::from_integer(v, characteristic_); }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.characteristic_ == b.characteristic_ && a.names_ == b.names_;
  }

 private:
  RingContext(std::vector<std::string> names, std::uint32_t characteristic, std::size_t num_aux);

  std::vector<std::string> names_;
  std::uint32_t characteristic_;
  std::size_t num_aux_;
};

bool same_ring(const Ring& a, const Ring& b) noexcept;
void require_same_ring(const Ring& a, const Ring& b);

struct Term {
  FieldElement coeff;
  Monomial monomial;
};

/// Sparse polynomial: nonzero terms, strictly descending under its order.
/// The empty term list is zero.
class Polynomial {
 public:
  explicit Polynomial(Ring ring, MonomialOrder order = MonomialOrder::lex());

  /// Sorts, combines like terms and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::lex());
  static Polynomial constant(Ring ring, const FieldElement& c,
                             MonomialOrder order = MonomialOrder::lex());
  static Polynomial constant(Ring ring, long c, MonomialOrder order = MonomialOrder::lex());
  /// x_{index+1} in user numbering is variable(ring, index).
  static Polynomial variable(Ring ring, std::size_t index, Monomial::Exponent power = 1,
                             MonomialOrder order = MonomialOrder::lex());
  static Polynomial monomial(Ring ring, const Monomial& m,
                             MonomialOrder order = MonomialOrder::lex());
  /// Adopts terms that are already canonical (strictly descending, nonzero).
  static Polynomial from_sorted_terms(Ring ring, std::vector<Term> terms, MonomialOrder order);

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const FieldElement& leading_coeff() const { return leading_term().coeff; }
  std::uint32_t total_degree() const noexcept;
  /// Bitwise OR of all term supports.
  std::uint32_t support() const noexcept;

  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const FieldElement& c, const Monomial& m) const;
  /// this - c * m * g, in one merge pass.
  Polynomial minus_term_multiple(const FieldElement& c, const Monomial& m,
                                 const Polynomial& g) const;
  Polynomial pow(unsigned e) const;

  /// Identical ring, order-independent term sets.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(Ring ring, MonomialOrder order, std::vector<Term> sorted_terms);

  Ring ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

namespace detail {
/// a + c * m * b over descending term lists; c and m may be null.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b,
                              const FieldElement* c, const Monomial* m,
                              const MonomialOrder& order);
}  // namespace detail

/// Lifts a polynomial into ring.extended(...): every x_i moves up one slot.
Polynomial lift_to_extended(const Polynomial& f, const Ring& extended,
                            const MonomialOrder& order);
/// Drops the leading auxiliary variable; requires f to be free of it.
Polynomial project_from_extended(const Polynomial& f, const Ring& base,
                                 const MonomialOrder& order);

/// Polynomial division by a single divisor; returns the quotient when the
/// remainder is zero, otherwise throws std::logic_error.
Polynomial divide_exact(const Polynomial& f, const Polynomial& divisor);

}  // namespace permahank
