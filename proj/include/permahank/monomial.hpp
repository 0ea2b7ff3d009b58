#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace permahank {

/// Largest supported number of variables, auxiliary variables included.
inline constexpr std::size_t kMaxVars = 32;

/// Dense exponent vector over a fixed number of variables. Variable 0 has
/// the highest priority in every order.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars);

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return num_vars_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  /// Bit i is set iff variable i occurs.
  std::uint32_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const noexcept {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.support_ & b.support_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.num_vars_ == b.num_vars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
  std::uint8_t num_vars_ = 0;
};

/// lex, deglex, or elim(k). Under elim(k) the first k variables form a block
/// that dominates the rest; both blocks are compared lexicographically.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { lex, deglex, elim };

  constexpr MonomialOrder() = default;

  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static constexpr MonomialOrder deglex() { return MonomialOrder(Kind::deglex, 0); }
  static constexpr MonomialOrder elimination(std::uint8_t block) {
    return MonomialOrder(Kind::elim, block);
  }
  /// Parses "lex", "deglex" or "elim(k)".
  static MonomialOrder parse(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  std::uint8_t block() const noexcept { return block_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    if (kind_ == Kind::deglex && a.degree() != b.degree()) return a.degree() <=> b.degree();
    // elim(k) with lex blocks agrees with lex on (block, rest).
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, std::uint8_t block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::lex;
  std::uint8_t block_ = 0;
};

}  // namespace permahank

template <>
struct std::hash<permahank::Monomial> {
  std::size_t operator()(const permahank::Monomial& m) const noexcept { return m.hash(); }
};
