#include "permahank/verification.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "permahank/format.hpp"

namespace permahank {

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport start(const std::string& claim, const HankelCase& c) {
  VerificationReport r;
  r.claim = claim;
  r.m = c.m();
  r.n = c.n();
  return r;
}

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Records the first failure only; later sub-checks keep the original witness.
void fail(VerificationReport& r, const std::string& check, const std::optional<Polynomial>& poly,
          nlohmann::json extra = nlohmann::json::object()) {
  if (!r.passed) return;
  r.passed = false;
  nlohmann::json w = std::move(extra);
  w["check"] = check;
  if (poly) w["polynomial"] = format(*poly);
  r.witness = std::move(w);
}

// Runs body, turning an exception into a failing report.
template <typename Body>
VerificationReport guarded(const std::string& claim, const HankelCase& c, Body body) {
  const auto t0 = Clock::now();
  VerificationReport r = start(claim, c);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.witness = nlohmann::json{{"check", "exception"}, {"error", e.what()}};
  }
  r.millis = elapsed_ms(t0);
  return r;
}

Polynomial index_monomial(const HankelCase& c, const std::vector<unsigned>& indices) {
  Polynomial out = Polynomial::constant(c.ring(), 1);
  for (unsigned k : indices) out *= c.x(k);
  return out;
}

bool contains_poly(const std::vector<Polynomial>& set, const Polynomial& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

bool check_equal(VerificationReport& r, const std::string& check, const Ideal& a, const Ideal& b) {
  const Equality e = equal(a, b);
  if (!e.equal) fail(r, check, e.witness);
  return e.equal;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report, bool timing) {
  nlohmann::json j{{"claim", report.claim},
                   {"m", report.m},
                   {"n", report.n},
                   {"status", report.passed ? "pass" : "fail"}};
  if (!report.witness.is_null()) j["witness"] = report.witness;
  if (!report.detail.empty()) j["detail"] = report.detail;
  j["millis"] = timing ? static_cast<std::int64_t>(report.millis + 0.5) : 0;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.m = j.at("m").get<unsigned>();
  r.n = j.at("n").get<unsigned>();
  const std::string status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("bad status " + status);
  r.passed = status == "pass";
  if (j.contains("witness")) r.witness = j.at("witness");
  if (j.contains("detail")) r.detail = j.at("detail").get<std::string>();
  r.millis = j.at("millis").get<double>();
  return r;
}

VerificationReport verify_gb(const HankelCase& c) {
  return guarded("gb." + to_string(c.shape()), c, [&](VerificationReport& r) {
    const auto reduced = c.p2().groebner_basis(MonomialOrder::lex());
    const std::vector<Polynomial>& basis = reduced->elements;
    const std::vector<Polynomial> closed = closed_form_gb(c);
    std::ostringstream detail;
    detail << "closed form " << closed.size() << ", reduced basis " << basis.size();

    if (c.shape() != ShapeClass::general) {
      std::vector<Polynomial> monic;
      for (const auto& g : closed) {
        Polynomial p = g.with_order(MonomialOrder::lex()).monic();
        if (!contains_poly(monic, p)) monic.push_back(std::move(p));
      }
      for (const auto& p : monic) {
        if (!contains_poly(basis, p)) {
          fail(r, "closed form element missing from reduced basis", p);
          break;
        }
      }
      for (const auto& p : basis) {
        if (!contains_poly(monic, p)) {
          fail(r, "reduced basis element missing from closed form", p);
          break;
        }
      }
      if (!r.passed) {
        // Diagnose how far the closed form is from the reduced basis.
        const GroebnerCheck check = is_groebner(closed, MonomialOrder::lex());
        const bool inter = reduce_basis(closed, MonomialOrder::lex()).elements == basis;
        detail << "; closed form is a Groebner basis: " << (check.is_groebner ? "yes" : "no")
               << "; inter-reduces to the reduced basis: " << (inter ? "yes" : "no");
      }
      r.detail = detail.str();
      return;
    }

    for (const auto& g : closed) {
      if (!c.p2().contains(g)) {
        fail(r, "closed form element not in P2", g);
        break;
      }
    }
    const GroebnerCheck check = is_groebner(closed, MonomialOrder::lex());
    if (!check.is_groebner) {
      fail(r, "Buchberger criterion", check.remainder,
           {{"pair", {format(closed[check.first]), format(closed[check.second])}}});
    }
    check_equal(r, "closed form generates P2", Ideal(c.ring(), closed), c.p2());
    const GroebnerBasis inter = reduce_basis(closed, MonomialOrder::lex());
    if (inter.elements != basis) {
      std::optional<Polynomial> w;
      for (const auto& p : inter.elements) {
        if (!contains_poly(basis, p)) {
          w = p;
          break;
        }
      }
      if (!w) {
        for (const auto& p : basis) {
          if (!contains_poly(inter.elements, p)) {
            w = p;
            break;
          }
        }
      }
      fail(r, "inter-reduction differs from reduced basis", w);
    }
    detail << ", inter-reduced " << inter.elements.size();
    r.detail = detail.str();
  });
}

VerificationReport verify_decomposition(const HankelCase& c) {
  return guarded("decomp.main", c, [&](VerificationReport& r) {
    const Ideal& p2 = c.p2();
    const Ideal Q1 = q1(c);
    const Ideal Q2 = q2(c);
    const Ideal J = embedded_j(c);
    const Polynomial last = c.x(c.r() + 1);
    const Polynomial first = c.x(1);

    check_equal(r, "(P2 : x_{r+1}^2) = Q1", colon(p2, last.pow(2)), Q1);
    check_equal(r, "(P2 : x_{r+1}^3) = Q1", colon(p2, last.pow(3)), Q1);
    const Ideal shifted = sum(p2, Ideal(c.ring(), {last.pow(2)}));
    check_equal(r, "(P2 + (x_{r+1}^2) : x1^2) = Q2", colon(shifted, first.pow(2)), Q2);
    check_equal(r, "(P2 + (x_{r+1}^2) : x1^3) = Q2", colon(shifted, first.pow(3)), Q2);

    const Ideal q12 = intersect(Q1, Q2);
    check_equal(r, "Q1 ∩ Q2 ∩ J = P2", intersect(q12, J), p2);

    for (unsigned k = 1; k <= c.num_vars(); ++k) {
      if (!radical_member(c.x(k), J)) fail(r, "x_k in radical of J", c.x(k));
    }
    if (J.is_unit()) fail(r, "J is proper", Polynomial::constant(c.ring(), 1));

    const Equality redundant = equal(q12, p2);
    const bool claimed = embedded_claimed(c);
    if (redundant.equal == claimed) {
      fail(r, claimed ? "Q1 ∩ Q2 != P2 (embedded component)" : "Q1 ∩ Q2 = P2 (J redundant)",
           redundant.witness);
    }
    r.detail = std::string("J redundant: ") + (redundant.equal ? "yes" : "no");
  });
}

VerificationReport verify_primary_properties(const HankelCase& c, unsigned samples,
                                             std::uint64_t seed) {
  return guarded("primary.components", c, [&](VerificationReport& r) {
    const MinimalPrimes primes = minimal_primes(c);
    const Ideal maximal = c.maximal_ideal();
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(c.m()) << 32 | c.n()));
    std::uniform_int_distribution<long> coeff(-3, 3);
    const unsigned nv = c.num_vars();

    auto random_form = [&](bool affine) {
      Polynomial y = affine ? Polynomial::constant(c.ring(), coeff(rng)) : Polynomial(c.ring());
      for (unsigned k = 1; k <= nv; ++k) {
        y += Polynomial::constant(c.ring(), coeff(rng)) * c.x(k);
      }
      return y;
    };

    struct Component {
      const char* name;
      Ideal q;
      const Ideal* prime;
      std::vector<Polynomial> outside;
      bool affine;
    };
    std::vector<Component> components{
        {"Q1", q1(c), &primes.p1, {c.x(c.r() + 1)}, false},
        {"Q2", q2(c), &primes.p2prime, {c.x(1)}, false},
        {"J", embedded_j(c), &maximal, {Polynomial::constant(c.ring(), 1) + c.x(1)}, true},
    };

    std::size_t colons = 0;
    for (auto& comp : components) {
      const std::string name = comp.name;
      for (const auto& v : comp.prime->generators()) {
        if (!radical_member(v, comp.q)) fail(r, name + ": prime generator in radical", v);
      }
      for (const auto& g : comp.q.generators()) {
        if (!comp.prime->contains(g)) fail(r, name + ": contained in prime", g);
      }
      std::vector<Polynomial> tests = comp.outside;
      for (unsigned s = 0; s < samples;) {
        Polynomial y = random_form(comp.affine);
        if (comp.prime->contains(y)) continue;
        tests.push_back(std::move(y));
        ++s;
      }
      for (const auto& y : tests) {
        ++colons;
        const Equality e = equal(colon(comp.q, y), comp.q);
        if (!e.equal) {
          fail(r, name + ": (Q : y) = Q", e.witness, {{"y", format(y)}});
        }
      }
    }
    r.detail = std::to_string(colons) + " colon checks";
  });
}

VerificationReport verify_associated_maximal(const HankelCase& c) {
  return guarded("assoc.maximal", c, [&](VerificationReport& r) {
    const std::vector<Polynomial> alphas = embedded_witnesses(c);
    if (alphas.empty()) {
      fail(r, "no embedded component is claimed for this shape", std::nullopt);
      return;
    }
    const Ideal maximal = c.maximal_ideal();
    for (const auto& a : alphas) {
      if (c.p2().contains(a)) fail(r, "alpha not in P2", a);
      const Equality e = equal(colon(c.p2(), a), maximal);
      if (!e.equal) fail(r, "(P2 : alpha) is maximal", e.witness, {{"alpha", format(a)}});
    }
    r.detail = "alpha: " + join(format_all(alphas), ", ");
  });
}

bool classify_embedded(const HankelCase& c) {
  return !equal(intersect(q1(c), q2(c)), c.p2()).equal;
}

IndexWalk reduction_walk(unsigned m, unsigned n, std::vector<unsigned> indices) {
  if (m > n) std::swap(m, n);
  IndexWalk walk;
  std::sort(indices.begin(), indices.end());
  while (indices.size() >= 2) {
    std::size_t u = 0;
    std::size_t v = 1;
    if (indices[1] - indices[0] < 2) {
      if (indices.size() < 3 || indices[2] - indices[0] < 2) break;
      v = 2;
    }
    const unsigned gap = indices[v] - indices[u];
    const unsigned s = gap > n - 1 ? gap - (n - 1) : 1;
    indices[u] += s;
    indices[v] -= s;
    walk.sign = -walk.sign;
    ++walk.steps;
    std::sort(indices.begin(), indices.end());
  }
  walk.indices = std::move(indices);
  return walk;
}

std::vector<unsigned> reduction_target(std::vector<unsigned> indices) {
  unsigned total = 0;
  for (unsigned k : indices) total += k;
  if (indices.size() == 2) {
    if (total % 2 == 0) return {total / 2, total / 2};
    return {(total - 1) / 2, (total + 1) / 2};
  }
  if (indices.size() == 3) {
    switch (total % 3) {
      case 0: return {total / 3, total / 3, total / 3};
      case 1: return {(total - 1) / 3, (total - 1) / 3, (total + 2) / 3};
      default: return {(total - 2) / 3, (total + 1) / 3, (total + 1) / 3};
    }
  }
  throw std::invalid_argument("reduction target needs two or three indices");
}

int printed_pair_sign(unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  const unsigned total = i + j;
  const long e = static_cast<long>(j) - 1 - static_cast<long>(total % 2 == 0 ? total / 2 : (total + 1) / 2);
  return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
}

VerificationReport verify_reduction_lemma(const HankelCase& c) {
  return guarded("lemma.reduction", c, [&](VerificationReport& r) {
    const std::vector<Polynomial>& h = c.permanents();
    const unsigned nv = c.num_vars();
    std::size_t pairs = 0;
    std::size_t triples = 0;
    std::size_t printed_mismatch = 0;

    auto check = [&](const std::vector<unsigned>& idx) {
      const IndexWalk walk = reduction_walk(c.m(), c.n(), idx);
      const std::vector<unsigned> target = reduction_target(idx);
      const Polynomial mono = index_monomial(c, idx);
      if (walk.indices != target) {
        fail(r, "index walk ends at the target monomial", mono,
             {{"indices", idx}, {"walk", walk.indices}, {"target", target}});
        return;
      }
      const Polynomial expected = index_monomial(c, target).scaled(c.ring()->from_integer(walk.sign));
      const Polynomial nf = normal_form(mono, h, MonomialOrder::lex());
      if (!(nf == expected)) {
        fail(r, "normal form matches signed target", mono,
             {{"normal_form", format(nf)}, {"expected", format(expected)}});
      }
    };

    for (unsigned i = 1; i <= nv; ++i) {
      for (unsigned j = i; j <= nv; ++j) {
        check({i, j});
        ++pairs;
        if (printed_pair_sign(i, j) != reduction_walk(c.m(), c.n(), {i, j}).sign) {
          ++printed_mismatch;
        }
        for (unsigned k = j; k <= nv; ++k) {
          check({i, j, k});
          ++triples;
        }
      }
    }
    r.detail = std::to_string(pairs) + " pairs, " + std::to_string(triples) +
               " triples; printed pair sign differs from the rewriting sign on " +
               std::to_string(printed_mismatch) + " pairs";
  });
}

std::vector<std::vector<unsigned>> three_entry_products(unsigned m, unsigned n) {
  if (m > n) std::swap(m, n);
  std::set<std::vector<unsigned>> out;
  // Lines a1 < a2 along one side, b1 < b2 < b3 along the other; each of the
  // three entries sits on one of the two lines, using both.
  auto sweep = [&](unsigned two_side, unsigned three_side, bool rows_are_two) {
    for (unsigned a1 = 1; a1 <= two_side; ++a1) {
      for (unsigned a2 = a1 + 1; a2 <= two_side; ++a2) {
        for (unsigned b1 = 1; b1 <= three_side; ++b1) {
          for (unsigned b2 = b1 + 1; b2 <= three_side; ++b2) {
            for (unsigned b3 = b2 + 1; b3 <= three_side; ++b3) {
              for (unsigned mask = 1; mask < 7; ++mask) {
                std::vector<unsigned> idx;
                const unsigned bs[3] = {b1, b2, b3};
                for (unsigned q = 0; q < 3; ++q) {
                  const unsigned a = (mask >> q) & 1u ? a2 : a1;
                  idx.push_back(rows_are_two ? a + bs[q] - 1 : bs[q] + a - 1);
                }
                std::sort(idx.begin(), idx.end());
                out.insert(std::move(idx));
              }
            }
          }
        }
      }
    }
  };
  sweep(m, n, true);
  sweep(n, m, false);
  return {out.begin(), out.end()};
}

std::vector<std::vector<unsigned>> degree_four_products(unsigned m, unsigned n) {
  if (m > n) std::swap(m, n);
  std::set<std::vector<unsigned>> out;
  if (m < 3) return {};
  for (unsigned i1 = 1; i1 <= m; ++i1) {
    for (unsigned i2 = i1 + 1; i2 <= m; ++i2) {
      for (unsigned i3 = i2 + 1; i3 <= m; ++i3) {
        for (unsigned j1 = 1; j1 <= n; ++j1) {
          for (unsigned j2 = j1 + 1; j2 <= n; ++j2) {
            for (unsigned j3 = j2 + 1; j3 <= n; ++j3) {
              std::array<unsigned, 3> cols{j1, j2, j3};
              do {
                const std::array<unsigned, 3> entries{i1 + cols[0] - 1, i2 + cols[1] - 1,
                                                      i3 + cols[2] - 1};
                for (unsigned twice = 0; twice < 3; ++twice) {
                  std::vector<unsigned> idx(entries.begin(), entries.end());
                  idx.push_back(entries[twice]);
                  std::sort(idx.begin(), idx.end());
                  out.insert(std::move(idx));
                }
              } while (std::next_permutation(cols.begin(), cols.end()));
            }
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

VerificationReport verify_membership_lemmas(const HankelCase& c) {
  return guarded("lemma.membership", c, [&](VerificationReport& r) {
    const auto three = three_entry_products(c.m(), c.n());
    const auto four = degree_four_products(c.m(), c.n());
    for (const auto& idx : three) {
      const Polynomial mono = index_monomial(c, idx);
      if (!c.p2().contains(mono)) fail(r, "three-entry product in P2", mono);
    }
    for (const auto& idx : four) {
      const Polynomial mono = index_monomial(c, idx);
      if (!c.p2().contains(mono)) fail(r, "degree-four product in P2", mono);
    }
    r.detail = std::to_string(three.size()) + " three-entry products, " +
               std::to_string(four.size()) + " degree-four products";
  });
}

VerificationReport verify_bound_lemma(const HankelCase& c) {
  return guarded("lemma.bound", c, [&](VerificationReport& r) {
    const std::vector<Polynomial>& h = c.permanents();
    const long lo = 7;
    const long hi = 3L * (c.m() + c.n()) - 7;
    std::size_t qualifying = 0;
    std::size_t zero = 0;

    auto index_sum = [&](const Monomial& mono) {
      long s = 0;
      for (std::size_t k = 0; k < mono.size(); ++k) s += static_cast<long>(k + 1) * mono[k];
      return s;
    };

    for (std::size_t a = 0; a < h.size(); ++a) {
      for (std::size_t b = a + 1; b < h.size(); ++b) {
        const Monomial& la = h[a].leading_monomial();
        const Monomial& lb = h[b].leading_monomial();
        if (la == lb || coprime(la, lb)) continue;
        ++qualifying;
        const Polynomial s = s_polynomial(h[a], h[b], MonomialOrder::lex());
        if (s.is_zero()) {
          ++zero;
          continue;
        }
        const nlohmann::json pair{{"pair", {format(h[a]), format(h[b])}}};
        if (s.size() != 2 || s.terms()[0].monomial.degree() != 3 ||
            s.terms()[1].monomial.degree() != 3) {
          fail(r, "S-polynomial is a cubic binomial", s, pair);
          continue;
        }
        const long s1 = index_sum(s.terms()[0].monomial);
        const long s2 = index_sum(s.terms()[1].monomial);
        if (s1 != s2) fail(r, "equal index sums", s, pair);
        if (s1 < lo || s1 > hi) fail(r, "index sum within bounds", s, pair);
      }
    }
    r.detail = std::to_string(qualifying) + " qualifying pairs (" + std::to_string(zero) +
               " zero), bound [7, " + std::to_string(hi) + "]";
  });
}

void select_checks(SuiteOptions& options, const std::string& selector) {
  const bool all = selector == "all";
  if (!all && selector != "gb" && selector != "decomp" && selector != "primary" &&
      selector != "assoc" && selector != "lemmas") {
    throw std::invalid_argument("unknown check selector '" + selector + "'");
  }
  options.gb = all || selector == "gb";
  options.decomp = all || selector == "decomp";
  options.primary = all || selector == "primary";
  options.assoc = all || selector == "assoc";
  options.lemmas = all || selector == "lemmas";
}

std::vector<VerificationReport> run_all(const std::vector<Shape>& grid,
                                        const SuiteOptions& options) {
  std::vector<Shape> shapes;
  for (auto [m, n] : grid) {
    if (m > n) std::swap(m, n);
    classify_shape(m, n);
    shapes.emplace_back(m, n);
  }
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());

  std::vector<std::vector<VerificationReport>> per_case(shapes.size());
  auto run_case = [&](std::size_t k) {
    const HankelCase c(shapes[k].first, shapes[k].second, options.characteristic);
    auto& out = per_case[k];
    if (options.gb) out.push_back(verify_gb(c));
    if (options.decomp) out.push_back(verify_decomposition(c));
    if (options.primary) out.push_back(verify_primary_properties(c, options.samples, options.seed));
    if (options.assoc && embedded_claimed(c)) out.push_back(verify_associated_maximal(c));
    if (options.lemmas) {
      out.push_back(verify_reduction_lemma(c));
      out.push_back(verify_membership_lemmas(c));
      out.push_back(verify_bound_lemma(c));
    }
  };

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shapes.size())));
  if (threads <= 1) {
    for (std::size_t k = 0; k < shapes.size(); ++k) run_case(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < shapes.size(); k = next++) run_case(k);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<VerificationReport> reports;
  for (auto& group : per_case) {
    for (auto& rep : group) reports.push_back(std::move(rep));
  }
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

}  // namespace permahank
