#include "permahank/cases.hpp"

#include <stdexcept>

namespace permahank {

std::string to_string(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::two_by_n: return "2xn";
    case ShapeClass::three_three: return "3x3";
    case ShapeClass::three_four_or_four_four: return "3x4_4x4";
    case ShapeClass::general: return "general";
  }
  return "unknown";
}

ShapeClass classify_shape(unsigned m, unsigned n) {
  if (m > n) std::swap(m, n);
  if (m < 2 || m + n <= 4) {
    throw std::invalid_argument("inadmissible shape " + std::to_string(m) + "x" +
                                std::to_string(n));
  }
  if (m == 2) return ShapeClass::two_by_n;
  if (m == 3 && n == 3) return ShapeClass::three_three;
  if ((m == 3 && n == 4) || (m == 4 && n == 4)) return ShapeClass::three_four_or_four_four;
  return ShapeClass::general;
}

HankelCase::HankelCase(unsigned m, unsigned n, std::uint32_t characteristic)
    : matrix_(m, n, characteristic),
      shape_(classify_shape(m, n)),
      p2_(matrix_.ring(), permanent_generators(matrix_)) {}

Polynomial HankelCase::x(unsigned k, unsigned power) const {
  if (k < 1 || k > num_vars()) throw std::out_of_range("variable index out of range");
  return Polynomial::variable(ring(), k - 1, static_cast<Monomial::Exponent>(power));
}

Polynomial HankelCase::monomial(std::initializer_list<unsigned> indices) const {
  Polynomial out = Polynomial::constant(ring(), 1);
  for (unsigned k : indices) out *= x(k);
  return out;
}

Ideal HankelCase::variables(unsigned first, unsigned last) const {
  std::vector<Polynomial> gens;
  for (unsigned k = first; k <= last; ++k) gens.push_back(x(k));
  return Ideal(ring(), std::move(gens));
}

std::string HankelCase::label() const { return std::to_string(m()) + "x" + std::to_string(n()); }

std::vector<Polynomial> closed_form_gb(const HankelCase& c) {
  const unsigned m = c.m();
  const unsigned n = c.n();
  std::vector<Polynomial> g;
  auto perm = [&](unsigned i, unsigned s, unsigned t) {
    return c.monomial({i, i + s + t}) + c.monomial({i + s, i + t});
  };

  switch (c.shape()) {
    case ShapeClass::two_by_n:
      for (unsigned i = 1; i <= n - 1; ++i) {
        for (unsigned t = 1; t <= n - i; ++t) g.push_back(perm(i, 1, t));
      }
      for (unsigned i = 2; i <= n - 1; ++i) g.push_back(c.monomial({i, i, i + 1}));
      for (unsigned i = 2; i <= n - 1; ++i) g.push_back(c.monomial({i, i + 1, i + 1}));
      for (unsigned i = 3; i <= n - 1; ++i) g.push_back(c.x(i, 3));
      g.push_back(c.x(2, 4));
      g.push_back(c.x(n, 4));
      return g;

    case ShapeClass::three_three:
      g = c.permanents();
      g.push_back(c.monomial({2, 2, 3}));
      g.push_back(c.monomial({2, 3, 3}));
      g.push_back(c.monomial({3, 3, 4}));
      g.push_back(c.monomial({3, 4, 4}));
      g.push_back(c.x(2, 4));
      g.push_back(c.x(3, 4));
      g.push_back(c.x(4, 4));
      return g;

    case ShapeClass::three_four_or_four_four: {
      const unsigned k = m + n;
      g = c.permanents();
      g.push_back(c.monomial({2, 2, 3}));
      g.push_back(c.monomial({k - 3, k - 2, k - 2}));
      for (unsigned i = 3; i <= k - 3; ++i) g.push_back(c.x(i, 2));
      g.push_back(c.x(2, 4));
      g.push_back(c.x(k - 2, 4));
      return g;
    }

    case ShapeClass::general: {
      const unsigned k = m + n;
      g = c.permanents();
      for (unsigned i = 3; i <= k - 4; ++i) g.push_back(c.monomial({i, i + 1}));
      g.push_back(c.monomial({2, 2, 3}));
      g.push_back(c.monomial({k - 3, k - 2, k - 2}));
      for (unsigned i = 3; i <= k - 3; ++i) g.push_back(c.x(i, 2));
      g.push_back(c.x(2, 4));
      g.push_back(c.x(k - 2, 4));
      return g;
    }
  }
  return g;
}

MinimalPrimes minimal_primes(const HankelCase& c) {
  return MinimalPrimes{c.variables(1, c.r()), c.variables(2, c.r() + 1)};
}

Ideal q1(const HankelCase& c) {
  const unsigned r = c.r();
  std::vector<Polynomial> g = c.variables(1, r - 3).generators();
  g.push_back(c.x(r - 2, 2));
  g.push_back(c.monomial({r - 2, r - 1}));
  g.push_back(c.monomial({r - 2, r}));
  g.push_back(c.monomial({r - 2, r + 1}) + c.monomial({r - 1, r}));
  g.push_back(c.x(r - 1, 2));
  g.push_back(c.monomial({r - 1, r + 1}) + c.x(r, 2));
  return Ideal(c.ring(), std::move(g));
}

Ideal q2(const HankelCase& c) {
  std::vector<Polynomial> g = c.variables(5, c.r() + 1).generators();
  g.push_back(c.monomial({1, 3}) + c.x(2, 2));
  g.push_back(c.monomial({1, 4}) + c.monomial({2, 3}));
  g.push_back(c.monomial({2, 4}));
  g.push_back(c.x(3, 2));
  g.push_back(c.monomial({3, 4}));
  g.push_back(c.x(4, 2));
  return Ideal(c.ring(), std::move(g));
}

Ideal embedded_j(const HankelCase& c) {
  std::vector<Polynomial> g = c.permanents();
  g.push_back(c.x(1, 2));
  g.push_back(c.x(c.r() + 1, 2));
  return Ideal(c.ring(), std::move(g));
}

bool embedded_claimed(const HankelCase& c) {
  const unsigned m = c.m();
  const unsigned n = c.n();
  if (m == 2) return n >= 4;
  if (m == 3 && (n == 3 || n == 4)) return true;
  if (m == 4 && n == 4) return true;
  return c.num_vars() >= 9;
}

std::vector<Polynomial> embedded_witnesses(const HankelCase& c) {
  std::vector<Polynomial> out;
  if (!embedded_claimed(c)) return out;
  const unsigned m = c.m();
  const unsigned n = c.n();
  if (m == 2) {
    for (unsigned i = 2; i <= n - 2; ++i) {
      for (unsigned j = std::max(4u, i + 1); j <= n; ++j) out.push_back(c.monomial({i, j}));
    }
  } else if (m == 3 && n == 3) {
    out.push_back(c.monomial({1, 3, 5}));
  } else if (m == 3 && n == 4) {
    out.push_back(c.monomial({2, 5}));
    out.push_back(c.monomial({3, 4}));
  } else if (m == 4 && n == 4) {
    out.push_back(c.monomial({2, 5}));
    out.push_back(c.monomial({3, 4}));
    out.push_back(c.monomial({3, 6}));
    out.push_back(c.monomial({4, 5}));
  } else {
    for (unsigned j = 5; j + 4 <= c.num_vars(); ++j) out.push_back(c.x(j));
  }
  return out;
}

std::vector<Shape> default_grid(unsigned max_vars) {
  std::vector<Shape> grid;
  for (unsigned m = 2; 2 * m - 1 <= max_vars; ++m) {
    for (unsigned n = m; m + n - 1 <= max_vars; ++n) {
      if (m + n >= 5) grid.emplace_back(m, n);
    }
  }
  return grid;
}

}  // namespace permahank
