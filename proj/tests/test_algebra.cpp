#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permlab/algebra.hpp"
#include "permlab/errors.hpp"

using namespace permlab;

namespace {

oracle::Poly as_poly(std::uint32_t code, std::uint64_t p) {
  oracle::Poly out;
  while (code) {
    out.c.push_back(std::int64_t(code % p));
    code /= std::uint32_t(p);
  }
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

std::uint32_t as_code(const oracle::Poly& f, std::uint64_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = f.c.size(); i-- > 0;) code = code * std::uint32_t(p) + std::uint32_t(f.c[i]);
  return code;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("prime power fields multiply like polynomials modulo an irreducible") {
  const std::vector<std::pair<std::uint64_t, std::uint32_t>> fields = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2},
                                                                       {5, 2}, {3, 3}, {7, 2}, {2, 5}, {5, 3}};
  for (auto [p, k] : fields) {
    const FieldView f = field_make(p, k);
    const std::uint64_t q = f.q();
    oracle::Poly m;
    if (k == 1) {
      m.c = {0, 1};  // x; reduction by x leaves constants
    } else {
      m.c = f.modulus();
      REQUIRE(m.c.size() == k + 1);
      CHECK(oracle::irreducible(m, std::int64_t(p)));
      CHECK(smallest_irreducible(p, k) == f.modulus());
    }
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y) {
        std::uint32_t expected;
        if (k == 1) {
          expected = std::uint32_t((std::uint64_t(x) * y) % p);
        } else {
          expected = as_code(oracle::poly_mod(oracle::poly_mul(as_poly(x, p), as_poly(y, p), std::int64_t(p)), m,
                                              std::int64_t(p)),
                             p);
        }
        REQUIRE(f.mul(x, y) == expected);
        REQUIRE(f.sub(f.add(x, y), y) == x);
        REQUIRE(f.add(x, f.neg(x)) == 0);
      }
    // Generator has order q - 1; squares are exactly the even powers.
    std::set<std::uint32_t> powers, even;
    std::uint32_t x = 1;
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
      powers.insert(x);
      if (e % 2 == 0) even.insert(x);
      x = f.mul(x, f.generator());
    }
    CHECK(powers.size() == q - 1);
    CHECK(x == 1);
    if (p != 2) {
      CHECK(std::set<std::uint32_t>(f.squares().begin(), f.squares().end()) == even);
      CHECK(f.squares().size() == (q - 1) / 2);
      CHECK(f.nonsquares().size() == (q - 1) / 2);
    }
    for (std::uint32_t y = 1; y < q; ++y) {
      std::set<std::uint32_t> orbit;
      std::uint32_t z = 1;
      for (std::uint64_t e = 0; e + 1 < q; ++e) {
        orbit.insert(z);
        z = f.mul(z, y);
      }
      CHECK(f.is_primitive(y) == (orbit.size() == q - 1));
      if (p != 2) CHECK(f.is_square(y) == (even.count(y) == 1));
    }
  }
}

TEST_CASE("field_make rejects non-primes and oversize fields") {
  CHECK_THROWS_AS(field_make(4, 1), UsageError);
  CHECK_THROWS_AS(field_make(2, 21), CapacityError);
  CHECK_NOTHROW(field_make(2, 20));
}

TEST_CASE("integer group order and arithmetic") {
  const GroupSpec z = GroupSpec::integers();
  const auto a = GroupElement::scalar(-7), b = GroupElement::scalar(12);
  CHECK(group_add(z, a, b) == GroupElement::scalar(5));
  CHECK(group_sub(z, a, b) == GroupElement::scalar(-19));
  CHECK(group_mul(z, a, b) == GroupElement::scalar(-84));
  CHECK(group_abs(z, a) == GroupElement::scalar(7));
  CHECK(group_cmp(z, a, b) == std::strong_ordering::less);
  CHECK_THROWS_AS(validate_element(z, GroupElement::scalar(kElementBound + 1)), UsageError);
}

TEST_CASE("lexicographic vectors are an ordered group") {
  const GroupSpec v = GroupSpec::integer_vectors(2);
  const GroupElement x({1, -5}), y({0, 100}), w({1, 3});
  CHECK(group_cmp(v, y, x) == std::strong_ordering::less);
  CHECK(group_cmp(v, x, w) == std::strong_ordering::less);
  // Translation invariance of the order.
  CHECK(group_cmp(v, group_add(v, y, w), group_add(v, x, w)) == std::strong_ordering::less);
  CHECK_THROWS_AS(group_mul(v, x, y), DomainError);
  CHECK_THROWS_AS(encode_element(v, x), DomainError);
}

TEST_CASE("cyclic products encode, decode and add componentwise") {
  const GroupSpec g = GroupSpec::cyclic_product({4, 6});
  CHECK(g.order() == 24);
  const auto all = all_elements(g);
  REQUIRE(all.size() == 24);
  for (std::size_t e = 0; e < all.size(); ++e) {
    CHECK(encode_element(g, all[e]) == i128(e));
    CHECK(decode_element(g, i128(e)) == all[e]);
  }
  CHECK(group_add(g, GroupElement({3, 5}), GroupElement({2, 4})) == GroupElement({1, 3}));
  CHECK(group_neg(g, GroupElement({1, 0})) == GroupElement({3, 0}));
  CHECK_THROWS_AS(group_cmp(g, all[0], all[1]), DomainError);
  CHECK_THROWS_AS(validate_element(g, GroupElement({4, 0})), UsageError);
}

TEST_CASE("invariant factors and cyclic Sylow 2-subgroups") {
  CHECK(invariant_factors({2, 2}) == std::vector<std::int64_t>{2, 2});
  CHECK(invariant_factors({4, 6}) == std::vector<std::int64_t>{2, 12});
  CHECK(invariant_factors({3, 5}) == std::vector<std::int64_t>{15});
  CHECK(sylow2_cyclic(GroupSpec::cyclic_product({12})));
  CHECK(sylow2_cyclic(GroupSpec::cyclic_product({3, 5})));
  CHECK(sylow2_cyclic(GroupSpec::cyclic_product({2, 3})));
  CHECK_FALSE(sylow2_cyclic(GroupSpec::cyclic_product({2, 2})));
  CHECK_FALSE(sylow2_cyclic(GroupSpec::cyclic_product({4, 6})));
  CHECK(sylow2_cyclic(GroupSpec::cyclic_product({4, 3})));
}

TEST_CASE("field groups expose ring structure") {
  const GroupSpec f = GroupSpec::prime_power_field(3, 2);
  CHECK(f.order() == 9);
  CHECK(f.has_multiplication());
  const auto all = all_elements(f);
  REQUIRE(all.size() == 9);
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto ex = std::uint32_t(encode_element(f, x)), ey = std::uint32_t(encode_element(f, y));
      CHECK(encode_element(f, group_mul(f, x, y)) == f.field()->mul(ex, ey));
      CHECK(encode_element(f, group_add(f, x, y)) == f.field()->add(ex, ey));
    }
  const GroupSpec fp = GroupSpec::prime_field(7);
  CHECK(group_mul(fp, GroupElement::scalar(3), GroupElement::scalar(5)) == GroupElement::scalar(1));
  CHECK_THROWS_AS(GroupSpec::prime_field(9), UsageError);
}

}  // TEST_SUITE
