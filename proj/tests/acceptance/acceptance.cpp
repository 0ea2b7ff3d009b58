// Acceptance runner: one PASS/FAIL line per criterion, exact checks only.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/properties.hpp"
#include "permahank/cases.hpp"
#include "permahank/format.hpp"
#include "permahank/groebner.hpp"
#include "permahank/verification.hpp"

using namespace permahank;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string label(unsigned m, unsigned n) { return std::to_string(m) + "x" + std::to_string(n); }

std::string fixed(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << v;
  return s.str();
}

struct Criterion {
  Criterion(int k, std::string t) : number(k), title(std::move(t)) {}

  int number;
  std::string title;
  bool passed = true;
  std::vector<std::string> notes;

  void note(const std::string& s) { notes.push_back(s); }
  void fail(const std::string& s) {
    passed = false;
    notes.push_back("FAIL " + s);
  }
};

std::set<std::string> monic_texts(const std::vector<Polynomial>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(format(p.with_order(MonomialOrder::lex()).monic()));
  return out;
}

// Why a listed set is not the reduced basis: a repeated leading monomial
// (not minimal) or a tail term divisible by another leading monomial.
std::string reducedness_defect(const std::vector<Polynomial>& listed) {
  const auto lex = MonomialOrder::lex();
  std::vector<Polynomial> ps;
  for (const auto& p : listed) ps.push_back(p.with_order(lex));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      const Monomial& lead = ps[j].leading_monomial();
      if (i < j && lead == ps[i].leading_monomial()) {
        return "not minimal: " + format(ps[i]) + " and " + format(ps[j]) +
               " share a leading monomial";
      }
      for (std::size_t t = 1; t < ps[i].size(); ++t) {
        if (lead.divides(ps[i].terms()[t].monomial)) {
          return "not reduced: a tail term of " + format(ps[i]) +
                 " is divisible by the leading monomial of " + format(ps[j]);
        }
      }
    }
  }
  return "";
}

// Closed-form set versus the reduced basis, element for element.
bool same_set(const HankelCase& c, Criterion& cr, double budget) {
  const auto start = Clock::now();
  const std::vector<Polynomial> closed = closed_form_gb(c);
  const GroebnerBasis reduced = buchberger(c.permanents(), MonomialOrder::lex());
  const double secs = seconds_since(start);
  const auto a = monic_texts(closed);
  const auto b = monic_texts(reduced.elements);
  std::string line = c.label() + ": listed " + std::to_string(a.size()) + ", reduced " +
                     std::to_string(b.size()) + ", " + fixed(secs) + " s";
  bool ok = a == b && secs < budget;
  if (a != b) {
    std::vector<std::string> only_listed;
    std::vector<std::string> only_reduced;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_listed));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_reduced));
    line += "; only listed: {";
    for (std::size_t k = 0; k < only_listed.size(); ++k) line += (k ? ", " : "") + only_listed[k];
    line += "}; only reduced: {";
    for (std::size_t k = 0; k < only_reduced.size(); ++k) {
      line += (k ? ", " : "") + only_reduced[k];
    }
    line += "}";
    // Diagnostics: is the listed set at least a basis of the same ideal?
    const bool basis = is_groebner(closed, MonomialOrder::lex()).is_groebner;
    const bool interreduces =
        reduce_basis(closed, MonomialOrder::lex()).elements == reduced.elements;
    line += std::string("; listed set is a Groebner basis: ") + (basis ? "yes" : "no") +
            ", inter-reduces to the reduced basis: " + (interreduces ? "yes" : "no");
    const std::string defect = reducedness_defect(closed);
    if (!defect.empty()) line += "; listed set is " + defect;
  }
  if (secs >= budget) line += "; over the " + fixed(budget) + " s budget";
  if (ok) {
    cr.note(line);
  } else {
    cr.fail(line);
  }
  return ok;
}

Criterion criterion1() {
  Criterion cr{1, "reduced-basis reproduction, 2xn, n = 3..8"};
  for (unsigned n = 3; n <= 8; ++n) {
    const HankelCase c(2, n);
    same_set(c, cr, 5.0);
    if (n == 3 && closed_form_gb(c).size() != 7) cr.fail("2x3: listed set does not have 7 elements");
  }
  return cr;
}

Criterion criterion2() {
  Criterion cr{2, "reduced-basis reproduction, 3x3, 3x4, 4x4"};
  const HankelCase c33(3, 3);
  if (closed_form_gb(c33).size() != 13) cr.fail("3x3: listed set does not have 13 elements");
  same_set(c33, cr, 10.0);
  same_set(HankelCase(3, 4), cr, 10.0);
  same_set(HankelCase(4, 4), cr, 10.0);
  return cr;
}

Criterion criterion3() {
  Criterion cr{3, "general-shape closed-form basis"};
  const std::vector<Shape> shapes{{3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 5}};
  for (const auto& [m, n] : shapes) {
    const auto start = Clock::now();
    const HankelCase c(m, n);
    const auto closed = closed_form_gb(c);
    const auto lex = MonomialOrder::lex();
    bool in = true;
    for (const auto& g : closed) in = in && c.p2().contains(g);
    const bool gb = is_groebner(closed, lex).is_groebner;
    const bool generates = equal(Ideal(c.ring(), closed), c.p2()).equal;
    const bool inter = reduce_basis(closed, lex).elements == c.p2().groebner_basis()->elements;
    const double secs = seconds_since(start);
    const std::string line = c.label() + ": (a) " + (in ? "yes" : "no") + " (b) " +
                             (gb ? "yes" : "no") + " (c) " + (generates ? "yes" : "no") +
                             " (d) " + (inter ? "yes" : "no") + ", " + fixed(secs) + " s";
    if (in && gb && generates && inter && secs < 60.0) {
      cr.note(line);
    } else {
      cr.fail(line);
    }
  }
  return cr;
}

Criterion criterion4(const std::vector<Shape>& grid) {
  Criterion cr{4, "primary decomposition over the grid"};
  for (const auto& [m, n] : grid) {
    const auto start = Clock::now();
    const HankelCase c(m, n);
    const Ideal Q1 = q1(c);
    const Ideal Q2 = q2(c);
    const Ideal J = embedded_j(c);
    const Polynomial last = c.x(c.r() + 1);
    const Ideal P2sq = sum(c.p2(), Ideal(c.ring(), {last.pow(2)}));
    std::vector<std::string> bad;
    if (!equal(colon(c.p2(), last.pow(2)), Q1).equal) bad.push_back("(P2 : x_{r+1}^2) != Q1");
    if (!equal(colon(c.p2(), last.pow(3)), Q1).equal) bad.push_back("(P2 : x_{r+1}^3) != Q1");
    if (!equal(colon(P2sq, c.x(1, 2)), Q2).equal) bad.push_back("(P2 + (x_{r+1}^2) : x1^2) != Q2");
    if (!equal(colon(P2sq, c.x(1, 3)), Q2).equal) bad.push_back("(P2 + (x_{r+1}^2) : x1^3) != Q2");
    bool radical = !J.is_unit();
    for (unsigned k = 1; k <= c.num_vars(); ++k) radical = radical && radical_member(c.x(k), J);
    if (!radical) bad.push_back("radical of J is not the maximal ideal");
    if (!equal(intersect(intersect(Q1, Q2), J), c.p2()).equal) bad.push_back("Q1 ∩ Q2 ∩ J != P2");
    const double secs = seconds_since(start);
    if (secs >= 60.0) bad.push_back("over 60 s");
    if (bad.empty()) continue;
    std::string line = c.label() + ":";
    for (const auto& b : bad) line += " " + b + ";";
    cr.fail(line);
  }
  if (cr.passed) cr.note(std::to_string(grid.size()) + " shapes, all identities hold");
  return cr;
}

Criterion criterion5(const std::vector<Shape>& grid) {
  Criterion cr{5, "embedded-component classification"};
  const std::set<Shape> without{{2, 3}, {3, 5}, {3, 6}, {4, 5}};
  std::string found;
  for (const auto& [m, n] : grid) {
    const bool embedded = classify_embedded(HankelCase(m, n));
    const bool expected = without.count({m, n}) == 0;
    if (!embedded) found += (found.empty() ? "" : ", ") + label(m, n);
    if (embedded != expected) {
      cr.fail(label(m, n) + ": embedded = " + (embedded ? "true" : "false"));
    }
  }
  cr.note("no embedded component on: " + found);
  return cr;
}

Criterion criterion6(const std::vector<Shape>& grid) {
  Criterion cr{6, "associated-prime colons"};
  std::size_t total = 0;
  for (const auto& [m, n] : grid) {
    const HankelCase c(m, n);
    if (!embedded_claimed(c)) continue;
    const Ideal maximal = c.maximal_ideal();
    const auto alphas = embedded_witnesses(c);
    if (alphas.empty()) cr.fail(c.label() + ": no witness monomials listed");
    for (const auto& alpha : alphas) {
      ++total;
      if (c.p2().contains(alpha)) cr.fail(c.label() + ": " + format(alpha) + " lies in P2");
      if (!equal(colon(c.p2(), alpha), maximal).equal) {
        cr.fail(c.label() + ": (P2 : " + format(alpha) + ") is not the maximal ideal");
      }
    }
  }
  if (cr.passed) cr.note(std::to_string(total) + " witness monomials checked");
  return cr;
}

Criterion criterion7(const std::vector<Shape>& grid) {
  Criterion cr{7, "lemma suite"};
  std::size_t reports = 0;
  for (const auto& [m, n] : grid) {
    const HankelCase c(m, n);
    for (const auto& r :
         {verify_membership_lemmas(c), verify_reduction_lemma(c), verify_bound_lemma(c)}) {
      ++reports;
      if (!r.passed) cr.fail(c.label() + " " + r.claim + ": " + r.witness.dump());
    }
  }
  if (cr.passed) cr.note(std::to_string(reports) + " lemma reports pass");
  return cr;
}

Criterion criterion8(const std::vector<Shape>& grid) {
  Criterion cr{8, "property suites"};
  const std::vector<Shape> small = default_grid(8);
  const props::Outcome outcomes[] = {
      props::order_axioms(11, 2000),
      props::ring_axioms(12, 300, 0),
      props::ring_axioms(13, 300, 3),
      props::ring_axioms(14, 300, 32003),
      props::permutation_uniqueness(small, 15, 3),
      props::intersection_colon_containments(grid, 16),
      props::gtz_splitting(grid),
      props::prime_field_agreement(grid, {3, 5, 32003}),
  };
  for (const auto& o : outcomes) {
    const std::string line = o.name + ": " + std::to_string(o.checks) + " checks";
    if (o.passed) {
      cr.note(line);
    } else {
      cr.fail(line + "; " + o.failure);
    }
  }
  return cr;
}

}  // namespace

int main() {
  const std::vector<Shape> grid = default_grid(12);
  std::vector<Criterion> results;
  const auto total = Clock::now();
  auto run = [&](Criterion c) {
    std::cout << "criterion " << c.number << " [" << (c.passed ? "PASS" : "FAIL") << "] "
              << c.title << '\n';
    for (const auto& n : c.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    results.push_back(std::move(c));
  };
  run(criterion1());
  run(criterion2());
  run(criterion3());
  run(criterion4(grid));
  run(criterion5(grid));
  run(criterion6(grid));
  run(criterion7(grid));
  run(criterion8(grid));

  std::cout << "\nsummary (" << fixed(seconds_since(total)) << " s)\n";
  int failed = 0;
  for (const auto& c : results) {
    std::cout << "  " << c.number << ": " << (c.passed ? "PASS" : "FAIL") << '\n';
    failed += c.passed ? 0 : 1;
  }
  std::cout << (8 - failed) << "/8 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
