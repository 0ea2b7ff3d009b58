#pragma once

// Checks that avoid the Groebner engine entirely: plain linear algebra on
// degree slices of homogeneous ideals, and brute-force monomial counting.

#include <cstddef>
#include <map>
#include <vector>

#include "permahank/polynomial.hpp"

namespace permahank::oracle {

/// All monomials of the given degree in num_vars variables.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// Row-echelon span of the degree-d slice of a homogeneous ideal, built from
/// every product u*g with u a monomial and deg(u*g) = d (a Macaulay matrix).
class DegreeSlice {
 public:
  DegreeSlice(const std::vector<Polynomial>& homogeneous_generators, unsigned degree);

  unsigned degree() const { return degree_; }
  /// Dimension of I_d.
  std::size_t rank() const { return pivots_.size(); }
  /// f homogeneous of this degree; exact span membership.
  bool contains(const Polynomial& f) const;

 private:
  using Row = std::map<std::size_t, FieldElement>;
  Row to_row(const Polynomial& f) const;
  void reduce(Row& row) const;
  void insert(Row row);

  unsigned degree_;
  std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)> columns_;
  std::map<std::size_t, Row> pivots_;
};

/// Number of degree-d monomials divisible by at least one of the leads.
std::size_t count_divisible(const std::vector<Monomial>& leads, std::size_t num_vars,
                            unsigned degree);

/// True when every generator has all terms of one degree.
bool is_homogeneous(const Polynomial& f);

}  // namespace permahank::oracle
