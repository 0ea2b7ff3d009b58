#pragma once

#include <cstdint>
#include <vector>

#include "permahank/ideal.hpp"
#include "permahank/polynomial.hpp"

namespace permahank {

/// The m×n Hankel matrix with entry(i, j) = x_{i+j-1} over K[x1..x_{m+n-1}].
/// Shapes are normalized so that m <= n.
class HankelMatrix {
 public:
  HankelMatrix(unsigned m, unsigned n, std::uint32_t characteristic = 0);

  unsigned m() const noexcept { return m_; }
  unsigned n() const noexcept { return n_; }
  std::size_t num_vars() const noexcept { return m_ + n_ - 1; }
  const Ring& ring() const noexcept { return ring_; }

  /// 1-based variable index of entry (i, j), both 1-based.
  unsigned index(unsigned i, unsigned j) const;
  Polynomial entry(unsigned i, unsigned j) const;

 private:
  unsigned m_;
  unsigned n_;
  Ring ring_;
};

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Sum over all permutations of the products a_{i,σ(i)}. Throws
/// std::invalid_argument on an empty or non-square matrix.
Polynomial permanent(const PolynomialMatrix& matrix);

/// Permanents of every r×r submatrix, deduplicated, in the order of
/// (row subset, column subset) enumeration.
Ideal subpermanents_ideal(const HankelMatrix& matrix, unsigned r);

/// x_i·x_{i+s+t} + x_{i+s}·x_{i+t} over 1 <= s <= m-1, 1 <= t <= n-1,
/// i + s + t <= m+n-1, one per distinct polynomial. Sorted by
/// (i, i+s+t, min(s, t)). Throws std::invalid_argument unless 2 <= m,
/// 2 <= n and m+n > 4.
std::vector<Polynomial> permanent_generators(const HankelMatrix& matrix);
std::vector<Polynomial> permanent_generators(unsigned m, unsigned n,
                                             std::uint32_t characteristic = 0);

/// Index form of one permanent generator.
struct PermanentIndex {
  unsigned i;
  unsigned s;
  unsigned t;
};

/// The (i, s, t) triples behind permanent_generators, with s <= t.
std::vector<PermanentIndex> permanent_indices(unsigned m, unsigned n);

}  // namespace permahank
