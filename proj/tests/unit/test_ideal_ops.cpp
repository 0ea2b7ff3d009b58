#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "permahank/cases.hpp"
#include "permahank/ideal.hpp"

using namespace permahank;
using permahank::test::polys;
using permahank::test::sorted_texts;
using permahank::test::texts;

namespace {

Ideal ideal_of(const Ring& ring, const std::vector<std::string>& gens) {
  return Ideal(ring, polys(ring, gens));
}

std::vector<std::string> basis(const Ideal& i) { return texts(i.groebner_basis()->elements); }

}  // namespace

TEST_SUITE("ideal_ops") {

TEST_CASE("product lists pairwise products") {
  const Ring ring = RingContext::make(7);
  const Ideal a = ideal_of(ring, {"x1", "x2", "x3"});
  const Ideal b = ideal_of(ring, {"x4^2", "x5", "x6", "x7"});
  const Ideal ab = product(a, b);
  CHECK(ab.generators().size() == 12);
  CHECK(format(ab.generators().front()) == "x1*x4^2");
  CHECK(format(ab.generators().back()) == "x3*x7");
  CHECK(texts(product(ideal_of(ring, {"x1"}), ideal_of(ring, {"x2"})).generators()) ==
        std::vector<std::string>{"x1*x2"});
}

TEST_CASE("sum with the zero ideal") {
  const HankelCase c(2, 4);
  CHECK(equal(sum(c.p2(), Ideal::zero(c.ring())), c.p2()).equal);
}

TEST_CASE("intersection") {
  const HankelCase c(2, 3);
  CHECK(equal(intersect(q1(c), q2(c)), c.p2()).equal);
  CHECK(equal(intersect(c.p2(), c.p2()), c.p2()).equal);
  const Ring ring = RingContext::make(2);
  CHECK(basis(intersect(ideal_of(ring, {"x1"}), ideal_of(ring, {"x2"}))) ==
        std::vector<std::string>{"x1*x2"});
  CHECK(intersect(ideal_of(ring, {"x1"}), Ideal::zero(ring)).is_zero());
}

TEST_CASE("intersection of non-monomial ideals") {
  const Ring ring = RingContext::make(2);
  // (x1 - x2) ∩ (x1 + x2) = (x1^2 - x2^2)
  CHECK(basis(intersect(ideal_of(ring, {"x1 - x2"}), ideal_of(ring, {"x1 + x2"}))) ==
        std::vector<std::string>{"x1^2 - x2^2"});
}

TEST_CASE("seeded basis after intersection is the true reduced basis") {
  const HankelCase c(3, 4);
  const Ideal meet = intersect(q1(c), q2(c));
  const Ideal fresh(c.ring(), meet.generators());
  CHECK(meet.groebner_basis()->elements == fresh.groebner_basis()->elements);
}

TEST_CASE("colon") {
  for (const auto& [m, n] : default_grid(8)) {
    const HankelCase c(m, n);
    CAPTURE(c.label());
    CHECK(equal(colon(c.p2(), c.x(c.r() + 1, 2)), q1(c)).equal);
  }
  const Ring ring = RingContext::make(3);
  const Ideal i = ideal_of(ring, {"x1*x2", "x3^2"});
  CHECK(equal(colon(i, Polynomial::constant(ring, 1)), i).equal);
  CHECK(basis(colon(ideal_of(ring, {"x1*x2"}), parse("x1", ring))) ==
        std::vector<std::string>{"x2"});
  CHECK_THROWS_AS(colon(i, Polynomial(ring)), std::invalid_argument);
}

TEST_CASE("saturation") {
  for (const auto& [m, n] : default_grid(8)) {
    const HankelCase c(m, n);
    CAPTURE(c.label());
    const Saturation s = saturate(c.p2(), c.x(c.r() + 1));
    CHECK(equal(s.ideal, q1(c)).equal);
    CHECK(s.exponent <= 2);
  }
  const Ring ring = RingContext::make(2);
  const Ideal i = ideal_of(ring, {"x1^2*x2"});
  const Saturation unit = saturate(i, Polynomial::constant(ring, 1));
  CHECK(unit.exponent == 0);
  CHECK(equal(unit.ideal, i).equal);
  const Saturation s = saturate(i, parse("x1", ring));
  CHECK(basis(s.ideal) == std::vector<std::string>{"x2"});
  CHECK(s.exponent == 2);
}

TEST_CASE("saturation cap") {
  const Ring ring = RingContext::make(2);
  const Ideal i = ideal_of(ring, {"x1^5*x2"});
  CHECK_THROWS_AS(saturate(i, parse("x1", ring), 3), std::runtime_error);
  CHECK(saturate(i, parse("x1", ring), 5).exponent == 5);

  setenv("PERMAHANK_MAX_ITERS", "7", 1);
  CHECK(default_saturation_cap() == 7);
  setenv("PERMAHANK_MAX_ITERS", "junk", 1);
  CHECK(default_saturation_cap() == 64);
  unsetenv("PERMAHANK_MAX_ITERS");
  CHECK(default_saturation_cap() == 64);
}

TEST_CASE("radical membership") {
  const HankelCase c(2, 3);
  CHECK(radical_member(c.x(2), embedded_j(c)));
  const Ring ring = RingContext::make(3);
  CHECK(radical_member(parse("x3", ring), ideal_of(ring, {"x3^2"})));
  CHECK_FALSE(radical_member(parse("x1", ring), ideal_of(ring, {"x2"})));
  CHECK(radical_member(parse("x1 + x2", ring), ideal_of(ring, {"x1^3", "x2^2"})));
  // monotone: members are radical members
  for (const auto& g : c.permanents()) CHECK(radical_member(g, c.p2()));
}

TEST_CASE("equality with witness") {
  const Ring ring = RingContext::make(2);
  const Ideal a = ideal_of(ring, {"x1"});
  CHECK(equal(a, a).equal);
  const Equality e = equal(a, ideal_of(ring, {"x2"}));
  CHECK_FALSE(e.equal);
  REQUIRE(e.witness.has_value());
  CHECK(format(*e.witness) == "x1");
}

TEST_CASE("decomposition identity") {
  for (const auto& [m, n] : default_grid(8)) {
    const HankelCase c(m, n);
    CAPTURE(c.label());
    CHECK(equal(intersect(intersect(q1(c), q2(c)), embedded_j(c)), c.p2()).equal);
  }
}

TEST_CASE("modular law on the redundancy instances") {
  // (I+J) ∩ (I+K) = I + (J ∩ (I+K)), with the ideals used when the 3x5
  // embedded component drops out.
  const HankelCase c(3, 5);
  const Ideal i = c.p2();
  const Ideal j = product(c.variables(1, 3), Ideal(c.ring(), {c.x(4, 2), c.x(5), c.x(6), c.x(7)}));
  const Ideal k = c.variables(2, 7);
  const Ideal ik = sum(i, k);
  CHECK(equal(intersect(sum(i, j), ik), sum(i, intersect(j, ik))).equal);
}

TEST_CASE("auxiliary variables never leak") {
  const HankelCase c(3, 3);
  const Ideal meet = intersect(q1(c), q2(c));
  for (const auto& g : meet.generators()) CHECK(g.ring()->num_vars() == c.num_vars());
  CHECK(meet.ring()->num_aux() == 0);
}

}  // TEST_SUITE
