#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "permahank/cases.hpp"

namespace permahank {

/// Pass/fail record for one claim on one shape. A failing report carries a
/// witness: the offending polynomial, pair, or sub-check.
struct VerificationReport {
  std::string claim;
  unsigned m = 0;
  unsigned n = 0;
  bool passed = true;
  nlohmann::json witness;  // null unless failed
  std::string detail;
  double millis = 0;
};

nlohmann::json to_json(const VerificationReport& report, bool timing = true);
VerificationReport report_from_json(const nlohmann::json& j);

/// Reduced lex basis of P2 against the closed form. For the 2×n, 3×3 and
/// 3×4/4×4 classes the two must coincide as sets of monic polynomials; for
/// the general class the closed form must lie in P2, satisfy Buchberger's
/// criterion, generate P2, and inter-reduce to the reduced basis.
VerificationReport verify_gb(const HankelCase& c);

/// Colon and intersection identities of the decomposition P2 = Q1 ∩ Q2 ∩ J,
/// the radical of J, and whether J is redundant exactly when no embedded
/// component is claimed.
VerificationReport verify_decomposition(const HankelCase& c);

/// Necessary conditions for Q1, Q2 and J to be primary to P1, P2' and the
/// maximal ideal: radical containments both ways, and (Q : y) = Q for the
/// variables outside the prime plus `samples` random forms outside it.
VerificationReport verify_primary_properties(const HankelCase& c, unsigned samples,
                                             std::uint64_t seed = 0x5eed);

/// Every listed α is outside P2 and (P2 : α) is the maximal ideal.
VerificationReport verify_associated_maximal(const HankelCase& c);

/// True iff Q1 ∩ Q2 != P2, i.e. the maximal ideal is an associated prime.
bool classify_embedded(const HankelCase& c);

/// Signed normal form of x_i·x_j (or x_i·x_j·x_k) against the permanents,
/// predicted by walking indices the way the reducer does: the first leading
/// term dividing the monomial is x_p·x_q with the smallest (p, q), and it is
/// rewritten to -x_{p+s}·x_{q-s} with the smallest admissible s.
struct IndexWalk {
  std::vector<unsigned> indices;  // sorted, final
  int sign = 1;
  unsigned steps = 0;
};
IndexWalk reduction_walk(unsigned m, unsigned n, std::vector<unsigned> indices);

/// Unsigned target monomial for a pair or triple, keyed by the index sum.
std::vector<unsigned> reduction_target(std::vector<unsigned> indices);

/// Sign printed alongside the pair targets: (-1)^(j-1-(i+j)/2) for even
/// i+j and (-1)^(j-1-(i+j+1)/2) for odd i+j, with i <= j.
int printed_pair_sign(unsigned i, unsigned j);

VerificationReport verify_reduction_lemma(const HankelCase& c);

/// Three-entry products over two rows and three columns (or three rows and
/// two columns), and for m, n >= 3 the degree-four products over distinct
/// rows and columns with exponents (2, 1, 1) in any arrangement.
VerificationReport verify_membership_lemmas(const HankelCase& c);

/// S-polynomials of permanents with distinct leading terms sharing a
/// variable are zero or binomials x_a·x_b·x_c ± x_a'·x_b'·x_c' with equal
/// index sums in [7, 3m+3n-7].
VerificationReport verify_bound_lemma(const HankelCase& c);

/// Monomials of the three-entry lemma, deduplicated, as sorted 1-based index lists.
std::vector<std::vector<unsigned>> three_entry_products(unsigned m, unsigned n);
/// Monomials of the degree-four lemma as sorted 1-based index lists (with repeats).
std::vector<std::vector<unsigned>> degree_four_products(unsigned m, unsigned n);

struct SuiteOptions {
  bool gb = true;
  bool decomp = true;
  bool primary = true;
  bool assoc = true;
  bool lemmas = true;
  unsigned samples = 2;
  std::uint64_t seed = 0x5eed;
  std::uint32_t characteristic = 0;
  /// Cases verified concurrently; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

/// Applies a selector: gb, decomp, primary, assoc, lemmas or all.
/// Throws std::invalid_argument on an unknown name.
void select_checks(SuiteOptions& options, const std::string& selector);

/// Every selected verification for every shape, ordered by (m, n) and then
/// by claim: gb, decomp, primary, assoc (when claimed), the three lemmas.
std::vector<VerificationReport> run_all(const std::vector<Shape>& grid,
                                        const SuiteOptions& options = {});

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace permahank
