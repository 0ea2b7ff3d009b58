#pragma once

// Property suites shared by the unit tests and the acceptance runner. Each
// returns a summary instead of asserting, so callers decide how to report.

#include <cstdint>
#include <string>
#include <vector>

#include "permahank/cases.hpp"

namespace permahank::props {

struct Outcome {
  explicit Outcome(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string failure;  // first counterexample, if any

  void fail(const std::string& what) {
    if (passed) failure = what;
    passed = false;
  }
};

/// Totality, antisymmetry, transitivity, multiplicativity, 1-minimality for
/// lex, deglex and elim(2) on random monomial triples.
Outcome order_axioms(std::uint64_t seed, unsigned samples);

/// Associativity, commutativity, distributivity, additive inverses and the
/// parse/format round trip on random polynomials.
Outcome ring_axioms(std::uint64_t seed, unsigned samples, std::uint32_t characteristic);

/// Reduced bases of P2 under shuffled generator lists are identical.
Outcome permutation_uniqueness(const std::vector<Shape>& grid, std::uint64_t seed,
                               unsigned shuffles);

/// I∩J ⊆ I, I∩J ⊆ J, IJ ⊆ I∩J, I ⊆ (I:f), f(I:f) ⊆ I on the case ideals.
Outcome intersection_colon_containments(const std::vector<Shape>& grid, std::uint64_t seed);

/// I = (I : f^k) ∩ (I + (f^k)) once (I : f^k) has stabilized.
Outcome gtz_splitting(const std::vector<Shape>& grid);

/// Every boolean verification outcome over the grid agrees between the
/// rationals and each prime field.
Outcome prime_field_agreement(const std::vector<Shape>& grid,
                              const std::vector<std::uint32_t>& primes);

}  // namespace permahank::props
