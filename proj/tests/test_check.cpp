#include <doctest.h>

#include "permlab/check.hpp"
#include "permlab/errors.hpp"

using namespace permlab;

namespace {

Constraint one(Clause c) {
  Constraint out;
  out.clauses.push_back(c);
  return out;
}

Arrangement cyc(const GroupSpec& g, const std::vector<i128>& values) {
  Arrangement a{g, Shape::Circular, {}};
  for (i128 v : values) a.elements.push_back(GroupElement::scalar(v));
  return a;
}

}  // namespace

TEST_SUITE("check") {

TEST_CASE("published primitive-root circles pass") {
  const auto f11 = GroupSpec::prime_field(11);
  CHECK(check(cyc(f11, {0, 6, 7, 1, 5, 3, 10, 8, 9, 4, 2}),
              one(Clause::edge(nt::PredicateSpec::primitive_root_mod(11), LabelerKind::Sum)))
            .pass);
  CHECK(check(integer_arrangement(Shape::Circular, {1, 9, 2, 4, 5, 8, 10, 3, 6, 7}),
              one(Clause::edge(nt::PredicateSpec::primitive_root_mod(11), LabelerKind::ProductMinusOne)))
            .pass);
}

TEST_CASE("sums that coincide in Z/4 are reported with their positions") {
  const auto z4 = GroupSpec::cyclic_product({4});
  const auto report = check(cyc(z4, {1, 2, 3, 0}), one(Clause::rainbow(ClauseKind::RainbowSum)));
  CHECK_FALSE(report.pass);
  REQUIRE(report.clause.has_value());
  CHECK(*report.clause == 0);
  // Edges 0 (1+2) and 2 (3+0) both give 3.
  CHECK(report.positions == std::vector<std::size_t>{0, 2});
  // Unreduced coordinates are not elements of Z/4.
  CHECK_THROWS_AS(check(cyc(z4, {1, 2, 3, 4}), one(Clause::rainbow(ClauseKind::RainbowSum))), UsageError);
}

TEST_CASE("integer rainbow clauses recompute labels directly") {
  const auto a = integer_arrangement(Shape::Circular, {0, 3, 1, 2, 4});
  CHECK(check(a, one(Clause::rainbow(ClauseKind::RainbowDiff))).pass);
  CHECK_FALSE(check(a, one(Clause::rainbow(ClauseKind::RainbowDistance))).pass);
  const auto lin = integer_arrangement(Shape::Linear, {1, 4, 2, 3});
  CHECK(check(lin, one(Clause::rainbow(ClauseKind::RainbowDistance))).pass);
  CHECK(check(integer_arrangement(Shape::Linear, {2, 1, 3, 4}), one(Clause::rainbow(ClauseKind::RainbowDiff, 4))).pass);
  CHECK_FALSE(
      check(integer_arrangement(Shape::Linear, {1, 2, 3}), one(Clause::rainbow(ClauseKind::RainbowDiff, 3))).pass);
}

TEST_CASE("a one-element circle has a self-edge") {
  const auto a = integer_arrangement(Shape::Circular, {3});
  CHECK(check(a, one(Clause::rainbow(ClauseKind::RainbowSum))).pass);
  // 3 + 3 is not prime, 1 + 1 is.
  CHECK_FALSE(check(a, one(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::Sum))).pass);
  CHECK(check(integer_arrangement(Shape::Circular, {1}), one(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::Sum)))
            .pass);
}

TEST_CASE("pins are enforced") {
  Constraint c = one(Clause::rainbow(ClauseKind::RainbowDistance));
  c.pins.first = GroupElement::scalar(1);
  c.pins.last = GroupElement::scalar(3);
  CHECK(check(integer_arrangement(Shape::Linear, {1, 4, 2, 3}), c).pass);
  const auto r = check(integer_arrangement(Shape::Linear, {4, 1, 2, 3}), c);
  CHECK_FALSE(r.pass);
  CHECK(r.positions == std::vector<std::size_t>{0});
}

TEST_CASE("problem checks require a permutation of the ground set") {
  Problem p{GroupSpec::integers(), integer_range(1, 4), Shape::Circular,
            one(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::Sum))};
  CHECK(check(integer_arrangement(Shape::Circular, {1, 2, 3, 4}), p).pass);
  CHECK_FALSE(check(integer_arrangement(Shape::Circular, {1, 2, 3}), p).pass);
  CHECK_FALSE(check(integer_arrangement(Shape::Linear, {1, 2, 3, 4}), p).pass);
}

TEST_CASE("a swapped pair in a long predicate circle is localized") {
  std::vector<i128> v = {0, 3, 12, 9, 15, 18, 6, 20, 19, 14, 13, 4, 2, 7, 16, 17, 11, 10, 5, 8, 1};
  const Clause clause = Clause::edge(nt::PredicateSpec::prime_shift(2, 1), LabelerKind::SquarePlus);
  CHECK(check(integer_arrangement(Shape::Circular, v), one(clause)).pass);
  std::swap(v[3], v[4]);
  const auto r = check(integer_arrangement(Shape::Circular, v), one(clause));
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.positions.empty());
  CHECK(r.positions[0] >= 2);
  CHECK(r.positions[0] <= 4);
}

TEST_CASE("triple sums and weighted sums follow traversal order") {
  CHECK(check(integer_arrangement(Shape::Circular, {1, 2, 3, 4}), one(Clause::rainbow(ClauseKind::RainbowTriple))).pass);
  CHECK(check(integer_arrangement(Shape::Circular, {1, 2, 3, 4, 5}), one(Clause::rainbow(ClauseKind::RainbowWeighted)))
            .pass);
  CHECK_FALSE(
      check(integer_arrangement(Shape::Circular, {0, 5, 6, 10}), one(Clause::rainbow(ClauseKind::RainbowWeighted))).pass);
}

}  // TEST_SUITE
