#include "permahank/hankel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permahank {

namespace {

void require_shape(unsigned m, unsigned n) {
  if (m < 2 || n < 2 || m + n <= 4) {
    throw std::invalid_argument("shape " + std::to_string(m) + "x" + std::to_string(n) +
                                " out of range: need m, n >= 2 and m+n > 4");
  }
}

// Calls visit(subset) for every k-subset of {0..n-1}, in lexicographic order.
template <typename Visit>
void for_each_subset(unsigned n, unsigned k, Visit visit) {
  std::vector<unsigned> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    visit(idx);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (unsigned q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

HankelMatrix::HankelMatrix(unsigned m, unsigned n, std::uint32_t characteristic)
    : m_(std::min(m, n)), n_(std::max(m, n)) {
  if (m_ < 1) throw std::invalid_argument("Hankel matrix needs at least one row");
  ring_ = RingContext::make(m_ + n_ - 1, characteristic);
}

unsigned HankelMatrix::index(unsigned i, unsigned j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) throw std::out_of_range("Hankel entry out of range");
  return i + j - 1;
}

Polynomial HankelMatrix::entry(unsigned i, unsigned j) const {
  return Polynomial::variable(ring_, index(i, j) - 1);
}

Polynomial permanent(const PolynomialMatrix& matrix) {
  const std::size_t k = matrix.size();
  if (k == 0) throw std::invalid_argument("permanent of an empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != k) throw std::invalid_argument("permanent of a non-square matrix");
  }
  const Ring& ring = matrix[0][0].ring();
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Polynomial total(ring);
  do {
    Polynomial product = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < k; ++i) product *= matrix[i][sigma[i]];
    total += product;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Ideal subpermanents_ideal(const HankelMatrix& matrix, unsigned r) {
  if (r < 1 || r > matrix.m()) {
    throw std::invalid_argument("subpermanent size " + std::to_string(r) +
                                " exceeds the row count " + std::to_string(matrix.m()));
  }
  std::vector<Polynomial> gens;
  for_each_subset(matrix.m(), r, [&](const std::vector<unsigned>& rows) {
    for_each_subset(matrix.n(), r, [&](const std::vector<unsigned>& cols) {
      PolynomialMatrix sub(r);
      for (unsigned a = 0; a < r; ++a) {
        for (unsigned b = 0; b < r; ++b) sub[a].push_back(matrix.entry(rows[a] + 1, cols[b] + 1));
      }
      Polynomial p = permanent(sub);
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    });
  });
  return Ideal(matrix.ring(), std::move(gens));
}

std::vector<PermanentIndex> permanent_indices(unsigned m, unsigned n) {
  if (m > n) std::swap(m, n);
  require_shape(m, n);
  const unsigned top = m + n - 1;
  std::vector<PermanentIndex> out;
  // With s <= t and m <= n, the pair is admissible iff s <= m-1 and t <= n-1.
  for (unsigned i = 1; i <= top; ++i) {
    for (unsigned gap = 2; i + gap <= top; ++gap) {
      for (unsigned s = 1; 2 * s <= gap; ++s) {
        const unsigned t = gap - s;
        if (s <= m - 1 && t <= n - 1) out.push_back(PermanentIndex{i, s, t});
      }
    }
  }
  return out;
}

std::vector<Polynomial> permanent_generators(const HankelMatrix& matrix) {
  require_shape(matrix.m(), matrix.n());
  std::vector<Polynomial> out;
  const Ring& ring = matrix.ring();
  for (const auto& [i, s, t] : permanent_indices(matrix.m(), matrix.n())) {
    out.push_back(Polynomial::variable(ring, i - 1) * Polynomial::variable(ring, i + s + t - 1) +
                  Polynomial::variable(ring, i + s - 1) * Polynomial::variable(ring, i + t - 1));
  }
  return out;
}

std::vector<Polynomial> permanent_generators(unsigned m, unsigned n,
                                             std::uint32_t characteristic) {
  if (m > n) std::swap(m, n);
  require_shape(m, n);
  return permanent_generators(HankelMatrix(m, n, characteristic));
}

}  // namespace permahank
