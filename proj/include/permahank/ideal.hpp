#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "permahank/groebner.hpp"
#include "permahank/polynomial.hpp"

namespace permahank {

/// A finitely generated ideal. Immutable; copies share a lazily filled,
/// thread-safe cache of reduced Groebner bases keyed by monomial order.
class Ideal {
 public:
  /// Zero generators are dropped.
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  /// (x_{first+1}, ..., x_{last}) in 0-based slot indices [first, last).
  static Ideal variables(const Ring& ring, std::size_t first, std::size_t last);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

  /// Reduced basis under the order; computed once per order.
  std::shared_ptr<const GroebnerBasis> groebner_basis(
      const MonomialOrder& order = MonomialOrder::lex()) const;
  /// Installs a basis already known to be the reduced basis under its order.
  void seed_basis(GroebnerBasis basis) const;

  bool contains(const Polynomial& f) const;
  bool is_unit() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// f is in I iff its normal form against the reduced lex basis is zero.
bool member(const Polynomial& f, const Ideal& ideal);

Ideal sum(const Ideal& a, const Ideal& b);
/// Generated by all pairwise generator products.
Ideal product(const Ideal& a, const Ideal& b);

/// I ∩ J, eliminating an auxiliary t from t·I + (t−1)·J under elim(1).
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : f) = (I ∩ (f)) / f.
Ideal colon(const Ideal& ideal, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  /// Smallest n with (I : f^n) = (I : f^(n+1)).
  unsigned exponent;
};

/// Iteration cap for saturate: PERMAHANK_MAX_ITERS when set, else 64.
unsigned default_saturation_cap();

/// Repeats colon by f until the ideal stops growing. Exceeding the cap throws
/// std::runtime_error.
Saturation saturate(const Ideal& ideal, const Polynomial& f,
                    unsigned max_iterations = default_saturation_cap());

/// f ∈ √I, decided by 1 ∈ I + (1 − y·f) with an auxiliary y.
bool radical_member(const Polynomial& f, const Ideal& ideal);

struct Equality {
  bool equal = true;
  /// On inequality: a reduced-basis element of one side missing from the other.
  std::optional<Polynomial> witness;
};

/// Equality of reduced lex bases.
Equality equal(const Ideal& a, const Ideal& b);

/// Every generator of a lies in b.
bool is_subset(const Ideal& a, const Ideal& b);

}  // namespace permahank
