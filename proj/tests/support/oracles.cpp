#include "oracles.hpp"

#include <stdexcept>

namespace permahank::oracle {

namespace {

void extend(std::vector<Monomial>& out, Monomial& current, std::size_t var, unsigned left) {
  const std::size_t n = current.size();
  if (var + 1 == n) {
    current.set(var, static_cast<Monomial::Exponent>(left));
    out.push_back(current);
    current.set(var, 0);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    current.set(var, static_cast<Monomial::Exponent>(e));
    extend(out, current, var + 1, left - e);
  }
  current.set(var, 0);
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) return out;
  Monomial current(num_vars);
  extend(out, current, 0, degree);
  return out;
}

bool is_homogeneous(const Polynomial& f) {
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != f.terms().front().monomial.degree()) return false;
  }
  return true;
}

DegreeSlice::DegreeSlice(const std::vector<Polynomial>& gens, unsigned degree)
    : degree_(degree), columns_(&lex_less) {
  if (gens.empty()) return;
  const std::size_t n = gens.front().ring()->num_vars();
  std::size_t k = 0;
  for (const auto& m : monomials_of_degree(n, degree)) columns_.emplace(m, k++);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!is_homogeneous(g)) throw std::invalid_argument("DegreeSlice needs homogeneous generators");
    const unsigned dg = g.total_degree();
    if (dg > degree) continue;
    for (const auto& u : monomials_of_degree(n, degree - dg)) {
      insert(to_row(g.times_term(g.ring()->one(), u)));
    }
  }
}

DegreeSlice::Row DegreeSlice::to_row(const Polynomial& f) const {
  Row row;
  for (const auto& t : f.terms()) {
    const auto it = columns_.find(t.monomial);
    if (it == columns_.end()) throw std::invalid_argument("term of the wrong degree");
    row.emplace(it->second, t.coeff);
  }
  return row;
}

void DegreeSlice::reduce(Row& row) const {
  auto it = row.begin();
  while (it != row.end()) {
    const auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    // Pivot rows are normalized to a leading 1.
    const FieldElement c = it->second;
    for (const auto& [col, v] : p->second) {
      auto [slot, fresh] = row.try_emplace(col, -(v * c));
      if (!fresh) slot->second -= v * c;
    }
    // Everything before the pivot column is untouched, so restart there.
    const std::size_t col = it->first;
    for (auto z = row.lower_bound(col); z != row.end();) {
      z = z->second.is_zero() ? row.erase(z) : std::next(z);
    }
    it = row.lower_bound(col);
  }
}

void DegreeSlice::insert(Row row) {
  reduce(row);
  if (row.empty()) return;
  const FieldElement inv = row.begin()->second.inverse();
  for (auto& [col, v] : row) v *= inv;
  pivots_.emplace(row.begin()->first, std::move(row));
}

bool DegreeSlice::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  Row row = to_row(f);
  reduce(row);
  return row.empty();
}

std::size_t count_divisible(const std::vector<Monomial>& leads, std::size_t num_vars,
                            unsigned degree) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(num_vars, degree)) {
    for (const auto& l : leads) {
      if (l.divides(m)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace permahank::oracle
