#include <doctest.h>

#include "../support/properties.hpp"

using namespace permahank;

namespace {

void expect(const props::Outcome& o) {
  INFO(o.name << ": " << o.failure);
  CHECK(o.passed);
  CHECK(o.checks > 0);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("order axioms") { expect(props::order_axioms(1, 400)); }

TEST_CASE("ring axioms over Q and F_p") {
  expect(props::ring_axioms(2, 100, 0));
  expect(props::ring_axioms(3, 100, 3));
  expect(props::ring_axioms(4, 100, 32003));
}

TEST_CASE("reduced basis is independent of generator order") {
  expect(props::permutation_uniqueness(default_grid(8), 5, 3));
}

TEST_CASE("intersection and colon containments") {
  expect(props::intersection_colon_containments(default_grid(8), 6));
}

TEST_CASE("splitting identity after saturation") { expect(props::gtz_splitting(default_grid(8))); }

TEST_CASE("prime fields agree with Q on small shapes") {
  expect(props::prime_field_agreement(default_grid(7), {3, 5, 32003}));
}

}  // TEST_SUITE
