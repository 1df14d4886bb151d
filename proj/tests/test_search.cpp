#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permlab/check.hpp"
#include "permlab/errors.hpp"
#include "permlab/search.hpp"

using namespace permlab;

namespace {

Constraint one(Clause c) {
  Constraint out;
  out.clauses.push_back(c);
  return out;
}

SearchOutcome count_all(const Problem& p) {
  SearchOptions o;
  o.enumerate_all = true;
  return search(p, o);
}

std::uint64_t symmetry_factor(const Problem& p) {
  const std::size_t n = p.ground.size();
  if (p.shape == Shape::Linear || !p.constraint.pins.empty()) return 1;
  if (p.constraint.reversal_symmetric() && n >= 3) return 2 * n;
  return n;
}

Clause random_clause(std::mt19937_64& rng) {
  static const std::vector<ClauseKind> rainbow = {ClauseKind::RainbowSum,      ClauseKind::RainbowDiff,
                                                  ClauseKind::RainbowDistance, ClauseKind::RainbowWeighted,
                                                  ClauseKind::RainbowTriple,   ClauseKind::RainbowProduct};
  static const std::vector<nt::PredicateSpec> preds = {
      nt::PredicateSpec::prime(),           nt::PredicateSpec::prime_shift(2, 1),
      nt::PredicateSpec::twin_index(),      nt::PredicateSpec::coprime_to(6),
      nt::PredicateSpec::primitive_root_mod(7), nt::PredicateSpec::quadratic_residue_mod(11),
      nt::PredicateSpec::quadratic_nonresidue_mod(13)};
  static const std::vector<LabelerKind> labelers = {
      LabelerKind::Sum,        LabelerKind::Diff,          LabelerKind::AbsDiffAndSum,      LabelerKind::SquarePlus,
      LabelerKind::SquareMinus, LabelerKind::ProductMinusOne, LabelerKind::TwoProductMinusOne,
      LabelerKind::TwoProductPlusOne, LabelerKind::AffineProduct, LabelerKind::AbsSquareDiff};
  if (rng() % 3 != 0) {
    const auto kind = rainbow[rng() % rainbow.size()];
    const std::int64_t modulus = rng() % 4 == 0 ? std::int64_t(3 + rng() % 6) : 0;
    return Clause::rainbow(kind, modulus);
  }
  return Clause::edge(preds[rng() % preds.size()],
                      Labeler{labelers[rng() % labelers.size()], std::int64_t(rng() % 5) - 2});
}

Problem random_problem(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = 1 + rng() % max_n;
  std::set<i128> values;
  while (values.size() < n) values.insert(i128(rng() % 17) - 6);
  Problem p{GroupSpec::integers(), integer_set({values.begin(), values.end()}),
            rng() % 3 == 0 ? Shape::Linear : Shape::Circular, {}};
  p.constraint.clauses.push_back(random_clause(rng));
  if (rng() % 3 == 0) p.constraint.clauses.push_back(random_clause(rng));
  if (rng() % 5 == 0) p.constraint.pins.first = p.ground[rng() % n];
  if (rng() % 5 == 0) {
    auto last = p.ground[rng() % n];
    if (!p.constraint.pins.first || !(last == *p.constraint.pins.first) || n == 1) p.constraint.pins.last = last;
  }
  return p;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("search, brute force and the direct oracle agree on random integer problems") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1500; ++t) {
    const Problem p = random_problem(rng, 6);
    std::vector<i128> ground;
    for (const auto& x : p.ground) ground.push_back(x.coords[0]);
    const std::uint64_t raw = oracle::count_raw(ground, p.shape, p.constraint);
    const BruteForceResult brute = brute_force_enumerate(p);
    const SearchOutcome all = count_all(p);
    const SearchOutcome first = search(p);
    std::string desc;
    for (const auto& c : p.constraint.clauses) desc += c.describe() + "; ";
    for (const auto& x : p.ground) desc += to_string(x) + " ";
    INFO("trial ", t, " ", to_string(p.shape), " pins ", p.constraint.pins.first.has_value(), "/",
         p.constraint.pins.last.has_value(), " ", desc);
    REQUIRE(brute.raw_count == raw);
    REQUIRE(all.status == (raw ? SearchStatus::Witness : SearchStatus::Exhausted));
    REQUIRE(all.witness_count == brute.canonical_count);
    REQUIRE(all.witness_count * symmetry_factor(p) == raw);
    REQUIRE((first.status == SearchStatus::Witness) == (raw > 0));
    if (first.witness) CHECK(oracle::satisfies(oracle::values(*first.witness), p.shape, p.constraint));
  }
}

TEST_CASE("witnesses from enumeration are canonical and distinct") {
  Problem p{GroupSpec::integers(), integer_range(1, 6), Shape::Circular,
            one(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::Sum))};
  const auto all = count_all(p);
  std::set<std::vector<i128>> seen;
  for (const auto& w : all.witnesses) {
    CHECK(canonical_form(w, p.constraint) == w);
    CHECK(check(w, p).pass);
    seen.insert(scalar_values(w));
  }
  CHECK(seen.size() == all.witness_count);
}

TEST_CASE("first witness is the least in ascending candidate order") {
  Problem filz{GroupSpec::integers(), integer_range(1, 4), Shape::Circular,
               one(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::Sum))};
  const auto out = search(filz);
  REQUIRE(out.status == SearchStatus::Witness);
  CHECK(scalar_values(*out.witness) == std::vector<i128>{1, 2, 3, 4});
}

TEST_CASE("differences distinct mod n exist exactly for even n") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    Problem p{GroupSpec::integers(), integer_range(1, n), Shape::Linear, one(Clause::rainbow(ClauseKind::RainbowDiff, n))};
    const auto out = search(p);
    if (n % 2 == 1 && n > 1) {
      CHECK_MESSAGE(out.status == SearchStatus::Exhausted, n);
    } else {
      REQUIRE_MESSAGE(out.status == SearchStatus::Witness, n);
      const auto v = scalar_values(*out.witness);
      // The differences telescope: their sum is i_1 - i_n, and they cover
      // 1..n-1 mod n, whose sum is n(n-1)/2.
      CHECK(oracle::mod(2 * (v.front() - v.back()), n) == 0);
    }
  }
}

TEST_CASE("exceptional four-element set has no sum-and-product circle") {
  Problem p{GroupSpec::integers(), integer_set({-2, -1, 1, 2}), Shape::Circular, {}};
  p.constraint.clauses = {Clause::rainbow(ClauseKind::RainbowSum), Clause::rainbow(ClauseKind::RainbowProduct)};
  CHECK(search(p).status == SearchStatus::Exhausted);
  CHECK(brute_force_enumerate(p).canonical_count == 0);
}

TEST_CASE("searches are deterministic") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const Problem p = random_problem(rng, 7);
    const auto a = search(p), b = search(p);
    CHECK(a.status == b.status);
    CHECK(a.nodes == b.nodes);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("budget stops the search and is reported") {
  Problem hard{GroupSpec::integers(), integer_range(1, 30), Shape::Circular,
               one(Clause::rainbow(ClauseKind::RainbowDiff, 30))};
  SearchOptions o;
  o.budget = 10;
  const auto out = search(hard, o);
  CHECK(out.status == SearchStatus::BudgetExceeded);
  CHECK(out.nodes <= 10);
  CHECK_FALSE(out.witness);
}

TEST_CASE("canonical form rotates and reflects only symmetric constraints") {
  const auto a = integer_arrangement(Shape::Circular, {3, 1, 2});
  CHECK(scalar_values(canonical_form(a, one(Clause::rainbow(ClauseKind::RainbowSum)))) == std::vector<i128>{1, 2, 3});
  CHECK(scalar_values(canonical_form(a, one(Clause::rainbow(ClauseKind::RainbowDiff)))) == std::vector<i128>{1, 2, 3});
  const auto b = integer_arrangement(Shape::Circular, {3, 2, 1});
  CHECK(scalar_values(canonical_form(b, one(Clause::rainbow(ClauseKind::RainbowSum)))) == std::vector<i128>{1, 2, 3});
  CHECK(scalar_values(canonical_form(b, one(Clause::rainbow(ClauseKind::RainbowDiff)))) == std::vector<i128>{1, 3, 2});
  const auto lin = integer_arrangement(Shape::Linear, {2, 1, 3});
  CHECK(canonical_form(lin, one(Clause::rainbow(ClauseKind::RainbowSum))) == lin);
}

TEST_CASE("reversal symmetry of clauses") {
  CHECK(Clause::rainbow(ClauseKind::RainbowSum).reversal_symmetric());
  CHECK(Clause::rainbow(ClauseKind::RainbowTriple).reversal_symmetric());
  CHECK_FALSE(Clause::rainbow(ClauseKind::RainbowDiff).reversal_symmetric());
  CHECK_FALSE(Clause::rainbow(ClauseKind::RainbowWeighted).reversal_symmetric());
  CHECK(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::ProductMinusOne).reversal_symmetric());
  CHECK_FALSE(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::SquarePlus).reversal_symmetric());
  CHECK_FALSE(Clause::edge(nt::PredicateSpec::prime(), LabelerKind::Diff).reversal_symmetric());
}

TEST_CASE("brute force trivial cases") {
  Problem single{GroupSpec::integers(), integer_set({5}), Shape::Circular, one(Clause::rainbow(ClauseKind::RainbowSum))};
  CHECK(brute_force_enumerate(single).canonical_count == 1);
  Problem two{GroupSpec::integers(), integer_range(1, 2), Shape::Linear, one(Clause::rainbow(ClauseKind::RainbowSum))};
  CHECK(brute_force_enumerate(two).canonical_count == 2);
  Problem big{GroupSpec::integers(), integer_range(1, 10), Shape::Linear, one(Clause::rainbow(ClauseKind::RainbowSum))};
  CHECK_THROWS_AS(brute_force_enumerate(big), CapacityError);
}

TEST_CASE("finite groups: search agrees with brute force") {
  std::mt19937_64 rng(5);
  const std::vector<std::vector<std::int64_t>> groups = {{5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {3, 3}, {9}, {2, 6}};
  for (int t = 0; t < 300; ++t) {
    const GroupSpec g = GroupSpec::cyclic_product(groups[rng() % groups.size()]);
    auto all = all_elements(g);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), 1 + rng() % 7));
    static const std::vector<ClauseKind> kinds = {ClauseKind::RainbowSum, ClauseKind::RainbowDiff,
                                                  ClauseKind::RainbowWeighted, ClauseKind::RainbowTriple};
    Problem p{g, all, rng() % 2 ? Shape::Linear : Shape::Circular,
              one(Clause::rainbow(kinds[rng() % kinds.size()]))};
    const auto brute = brute_force_enumerate(p);
    const auto every = count_all(p);
    INFO(g.describe(), " n=", all.size());
    REQUIRE(every.witness_count == brute.canonical_count);
  }
}

TEST_CASE("field predicate problems agree with brute force") {
  const GroupSpec f = GroupSpec::prime_power_field(3, 2);
  auto all = all_elements(f);
  all.resize(7);
  for (auto kind : {LabelerKind::Sum, LabelerKind::Diff, LabelerKind::AffineProduct}) {
    for (auto pred : {nt::PredicateSpec::field_primitive(3, 2), nt::PredicateSpec::field_square(3, 2),
                      nt::PredicateSpec::field_nonsquare(3, 2)}) {
      Problem p{f, all, Shape::Circular, one(Clause::edge(pred, Labeler{kind, 1}))};
      CHECK(count_all(p).witness_count == brute_force_enumerate(p).canonical_count);
    }
  }
}

TEST_CASE("triple clauses are capped at 64 elements") {
  Problem p{GroupSpec::integers(), integer_range(1, 65), Shape::Circular, one(Clause::rainbow(ClauseKind::RainbowTriple))};
  CHECK_THROWS_AS(search(p), CapacityError);
}

TEST_CASE("two numberings with distinct a + 2b") {
  for (std::int64_t m = 2; m <= 9; ++m) {
    const GroupSpec g = GroupSpec::cyclic_product({m});
    auto all = all_elements(g);
    for (std::size_t n = 1; n <= std::min<std::size_t>(6, all.size()); ++n) {
      std::vector<GroupElement> ground(all.begin(), all.begin() + std::ptrdiff_t(n));
      const auto out = search_pairing(g, ground);
      const auto count = brute_force_pairings(g, ground);
      CHECK((out.status == SearchStatus::Witness) == (count > 0));
      if (out.status == SearchStatus::Witness) CHECK(check_pairing(g, ground, out.pairs));
    }
  }
}

}  // TEST_SUITE
