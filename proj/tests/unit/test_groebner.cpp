#include <doctest.h>

#include "../support/oracles.hpp"
#include "helpers.hpp"
#include "permahank/cases.hpp"
#include "permahank/groebner.hpp"

using namespace permahank;
using permahank::test::polys;
using permahank::test::sorted;
using permahank::test::sorted_texts;
using permahank::test::texts;

TEST_SUITE("groebner") {

TEST_CASE("normal form against the 3x3 permanents") {
  const HankelCase c(3, 3);
  // x1*x5 + x3^2 is itself a permanent (i=1, s=t=2), so one rewrite suffices.
  CHECK(format(normal_form(c.monomial({1, 5}), c.permanents(), MonomialOrder::lex())) == "-x3^2");
}

TEST_CASE("normal form of irreducible and single-step inputs") {
  const HankelCase c(2, 3);
  CHECK(format(normal_form(c.x(1, 2), c.permanents(), MonomialOrder::lex())) == "x1^2");
  const Ring ring = RingContext::make(4);
  CHECK(format(normal_form(parse("x2*x4", ring), polys(ring, {"x2*x4 + x3^2"}),
                           MonomialOrder::lex())) == "-x3^2");
}

TEST_CASE("S-polynomials") {
  const Ring ring = RingContext::make(5);
  const auto lex = MonomialOrder::lex();
  CHECK(format(s_polynomial(parse("x1*x3 + x2^2", ring), parse("x1*x5 + x3^2", ring), lex)) ==
        "x2^2*x5 - x3^3");
  const auto f = parse("x1*x3 + x2^2", ring);
  CHECK(s_polynomial(f, f, lex).is_zero());
  CHECK(format(s_polynomial(f, parse("x2*x4 + x3^2", ring), lex)) == "-x1*x3^3 + x2^3*x4");
}

TEST_CASE("reduced basis of the 2x3 case") {
  const HankelCase c(2, 3);
  const GroebnerBasis gb = buchberger(c.permanents(), MonomialOrder::lex());
  CHECK(gb.is_reduced);
  CHECK(sorted_texts(gb.elements) ==
        sorted({"x1*x3 + x2^2", "x1*x4 + x2*x3", "x2*x4 + x3^2", "x2^2*x3", "x2*x3^2", "x2^4",
                "x3^4"}));
}

TEST_CASE("reduced basis of the 3x3 case has 13 elements") {
  const HankelCase c(3, 3);
  CHECK(buchberger(c.permanents(), MonomialOrder::lex()).elements.size() == 13);
}

TEST_CASE("degenerate inputs") {
  const Ring ring = RingContext::make(3);
  CHECK(texts(buchberger(polys(ring, {"x1"}), MonomialOrder::lex()).elements) ==
        std::vector<std::string>{"x1"});
  CHECK(buchberger(polys(ring, {"0", "0"}), MonomialOrder::lex()).elements.empty());
  const auto unit = buchberger(polys(ring, {"x1 + 1", "x1"}), MonomialOrder::lex());
  CHECK(unit.is_unit_ideal());
}

TEST_CASE("is_groebner") {
  const HankelCase general(3, 5);
  CHECK(is_groebner(closed_form_gb(general), MonomialOrder::lex()).is_groebner);

  const Ring ring = RingContext::make(3);
  CHECK(is_groebner(polys(ring, {"x1*x3 + x2^2"}), MonomialOrder::lex()).is_groebner);

  const HankelCase small(2, 3);
  const GroebnerCheck raw = is_groebner(small.permanents(), MonomialOrder::lex());
  CHECK_FALSE(raw.is_groebner);
  REQUIRE(raw.remainder.has_value());
  CHECK(raw.remainder->is_monomial());
}

TEST_CASE("membership") {
  for (const auto& [m, n] : default_grid(8)) {
    const HankelCase c(m, n);
    CHECK(c.p2().contains(c.monomial({1, 3, 3})));
    CHECK_FALSE(c.p2().contains(Polynomial::constant(c.ring(), 1)));
  }
  const HankelCase c(3, 3);
  CHECK_FALSE(member(c.monomial({1, 3, 5}), c.p2()));
}

TEST_CASE("criteria off gives the same reduced basis") {
  for (const auto& [m, n] : default_grid(6)) {
    const HankelCase c(m, n);
    const auto with = buchberger(c.permanents(), MonomialOrder::lex());
    BuchbergerOptions bare;
    bare.coprime_criterion = false;
    bare.chain_criterion = false;
    BuchbergerStats stats;
    const auto without = buchberger(c.permanents(), MonomialOrder::lex(), bare, &stats);
    CHECK(with.elements == without.elements);
    CHECK(stats.pairs_reduced >= stats.zero_reductions);
  }
}

TEST_CASE("coprime leading terms give S-polynomials reducing to zero") {
  for (const auto& [m, n] : default_grid(7)) {
    const HankelCase c(m, n);
    const auto gb = buchberger(c.permanents(), MonomialOrder::lex()).elements;
    for (std::size_t i = 0; i < gb.size(); ++i) {
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        if (!coprime(gb[i].leading_monomial(), gb[j].leading_monomial())) continue;
        CHECK(normal_form(s_polynomial(gb[i], gb[j], MonomialOrder::lex()), gb,
                          MonomialOrder::lex())
                  .is_zero());
      }
    }
  }
}

TEST_CASE("normal form invariants") {
  const HankelCase c(3, 4);
  const auto lex = MonomialOrder::lex();
  const auto gens = c.permanents();
  const Ideal ideal(c.ring(), gens);
  const char* samples[] = {"x1*x2*x6 + 3*x4^3", "x1^2*x6^2 - x2*x5", "x3*x4*x5*x6 + x1"};
  for (const char* s : samples) {
    const Polynomial f = parse(s, c.ring());
    const Polynomial r = normal_form(f, gens, lex);
    CHECK(ideal.contains(f - r));
    const Polynomial rr = normal_form(f, ideal.groebner_basis()->elements, lex);
    for (const auto& t : rr.terms()) {
      for (const auto& g : ideal.groebner_basis()->elements) {
        CHECK_FALSE(g.leading_monomial().divides(t.monomial));
      }
    }
  }
}

TEST_CASE("Hilbert function of the leading-term ideal matches a Macaulay matrix") {
  // Degree slices computed by plain linear algebra on u*g products; the
  // reduced basis must cut out the same number of monomials in each degree.
  for (const auto& [m, n] : std::vector<Shape>{{2, 3}, {2, 4}, {3, 3}, {3, 4}}) {
    const HankelCase c(m, n);
    const auto gb = buchberger(c.permanents(), MonomialOrder::lex()).elements;
    std::vector<Monomial> leads;
    for (const auto& g : gb) leads.push_back(g.leading_monomial());
    for (unsigned d = 2; d <= 5; ++d) {
      const oracle::DegreeSlice slice(c.permanents(), d);
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(d);
      CHECK(slice.rank() == oracle::count_divisible(leads, c.num_vars(), d));
      for (const auto& g : gb) {
        if (g.total_degree() == d) CHECK(slice.contains(g));
      }
    }
  }
}

TEST_CASE("deglex basis agrees with the Macaulay slices too") {
  const HankelCase c(3, 3);
  const auto gb = buchberger(c.permanents(), MonomialOrder::deglex()).elements;
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.leading_monomial());
  for (unsigned d = 2; d <= 5; ++d) {
    CHECK(oracle::DegreeSlice(c.permanents(), d).rank() ==
          oracle::count_divisible(leads, c.num_vars(), d));
  }
}

TEST_CASE("prime field bases share the rational leading terms for the 3x4 case") {
  const auto q = buchberger(HankelCase(3, 4).permanents(), MonomialOrder::lex()).elements;
  for (std::uint32_t p : {3u, 5u, 32003u}) {
    const auto fp = buchberger(HankelCase(3, 4, p).permanents(), MonomialOrder::lex()).elements;
    REQUIRE(fp.size() == q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
      CHECK(fp[k].leading_monomial() == q[k].leading_monomial());
    }
  }
}

}  // TEST_SUITE
