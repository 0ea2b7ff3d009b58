#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permahank/hankel.hpp"
#include "permahank/ideal.hpp"

namespace permahank {

enum class ShapeClass { two_by_n, three_three, three_four_or_four_four, general };

std::string to_string(ShapeClass shape);

/// An admissible Hankel shape (2 <= m <= n, m+n > 4) with its ring and
/// the ideal P2 of 2×2 subpermanents.
class HankelCase {
 public:
  HankelCase(unsigned m, unsigned n, std::uint32_t characteristic = 0);

  unsigned m() const noexcept { return matrix_.m(); }
  unsigned n() const noexcept { return matrix_.n(); }
  /// Number of variables, m+n-1.
  unsigned num_vars() const noexcept { return m() + n() - 1; }
  /// m+n-2.
  unsigned r() const noexcept { return m() + n() - 2; }
  ShapeClass shape() const noexcept { return shape_; }
  std::uint32_t characteristic() const noexcept { return ring()->characteristic(); }

  const HankelMatrix& matrix() const noexcept { return matrix_; }
  const Ring& ring() const noexcept { return matrix_.ring(); }
  /// Generated by the permanents, in permanent_generators order.
  const Ideal& p2() const noexcept { return p2_; }
  const std::vector<Polynomial>& permanents() const noexcept { return p2_.generators(); }

  /// x_k with k 1-based.
  Polynomial x(unsigned k, unsigned power = 1) const;
  /// x_a·x_b·... for 1-based indices.
  Polynomial monomial(std::initializer_list<unsigned> indices) const;
  /// (x_first, ..., x_last), 1-based and inclusive; empty when first > last.
  Ideal variables(unsigned first, unsigned last) const;
  Ideal maximal_ideal() const { return variables(1, num_vars()); }

  std::string label() const;

 private:
  HankelMatrix matrix_;
  ShapeClass shape_;
  Ideal p2_;
};

ShapeClass classify_shape(unsigned m, unsigned n);

/// The closed-form basis for the case's shape class, enumerated from its
/// index ranges in a fixed order (permanents, then the monomial families).
std::vector<Polynomial> closed_form_gb(const HankelCase& c);

struct MinimalPrimes {
  /// (x1, ..., x_{m+n-2})
  Ideal p1;
  /// (x2, ..., x_{m+n-1})
  Ideal p2prime;
};
MinimalPrimes minimal_primes(const HankelCase& c);

/// (x1..x_{r-3}, x_{r-2}², x_{r-2}x_{r-1}, x_{r-2}x_r, x_{r-2}x_{r+1} + x_{r-1}x_r,
///  x_{r-1}², x_{r-1}x_{r+1} + x_r²), primary to P1.
Ideal q1(const HankelCase& c);
/// (x5..x_{r+1}, x1x3 + x2², x1x4 + x2x3, x2x4, x3², x3x4, x4²), primary to P2'.
Ideal q2(const HankelCase& c);
/// P2 + (x1², x_{r+1}²), primary to the maximal ideal.
Ideal embedded_j(const HankelCase& c);

/// Whether the maximal ideal is claimed to be associated: 2×n with n >= 4,
/// 3×3, 3×4, 4×4, and m >= 3 with m+n-1 >= 9.
bool embedded_claimed(const HankelCase& c);

/// The elements α with (P2 : α) maximal listed for the case; empty when no
/// embedded component is claimed.
std::vector<Polynomial> embedded_witnesses(const HankelCase& c);

using Shape = std::pair<unsigned, unsigned>;

/// All (m, n) with 2 <= m <= n, m+n >= 5 and m+n-1 <= max_vars, sorted.
std::vector<Shape> default_grid(unsigned max_vars = 12);

}  // namespace permahank
