#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "permahank/polynomial.hpp"

namespace permahank {

struct GroebnerBasis {
  /// Monic elements sorted by leading monomial, largest first.
  std::vector<Polynomial> elements;
  MonomialOrder order;
  bool is_minimal = false;
  bool is_reduced = false;

  bool is_unit_ideal() const {
    return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
  }
};

struct BuchbergerOptions {
  /// Skip pairs whose leading monomials are coprime.
  bool coprime_criterion = true;
  /// Gebauer-Moller chain criterion (lcm divisibility among pairs).
  bool chain_criterion = true;
  /// Return the reduced basis; otherwise a Groebner basis as produced.
  bool reduce = true;
};

/// Statistics of one Buchberger run, for diagnostics and benchmarks.
struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Full reduction of f by the reducers. Reducers are tried in index order and
/// the largest reducible term is rewritten first, so the result is
/// deterministic. Zero reducers are ignored.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> reducers,
                       const MonomialOrder& order);

/// S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm of the leading
/// monomials; lt includes the leading coefficient.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's algorithm, normal selection strategy (smallest lcm first,
/// ties by smallest index pair). Zero generators are dropped; an all-zero
/// input yields an empty basis.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr);

/// Minimalizes and inter-reduces a Groebner basis into the reduced basis.
GroebnerBasis reduce_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

struct GroebnerCheck {
  bool is_groebner = true;
  /// First offending pair (i < j) in index order, with its nonzero normal form.
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<Polynomial> remainder;
};

/// Buchberger's criterion with no pair skipped: every S-polynomial must
/// reduce to zero against the set.
GroebnerCheck is_groebner(std::span<const Polynomial> basis, const MonomialOrder& order);

}  // namespace permahank
