#include "permlab/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "permlab/errors.hpp"
#include "permlab/numtheory.hpp"

namespace permlab::cons {

namespace {

using Index = std::vector<std::size_t>;  // 1-based positions into the sorted input

Construction finish(Arrangement arrangement, Constraint constraint, std::string branch,
                    const std::vector<GroupElement>& input) {
  std::vector<GroupElement> got = arrangement.elements;
  std::vector<GroupElement> want = input;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want)
    throw PostconditionError("construction (" + branch + ") is not a permutation of its input " +
                             permlab::to_string(arrangement));
  const CheckReport report = check(arrangement, constraint);
  if (!report.pass)
    throw PostconditionError("construction (" + branch + ") failed its postcondition on " +
                             permlab::to_string(arrangement) + ": " + report.message);
  return Construction{std::move(arrangement), std::move(constraint), std::move(branch)};
}

Index identity(std::size_t n) {
  Index idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  return idx;
}

std::vector<GroupElement> pick(const std::vector<GroupElement>& a, const Index& idx) {
  std::vector<GroupElement> out;
  out.reserve(idx.size());
  for (std::size_t k : idx) out.push_back(a[k - 1]);
  return out;
}

// Swap the entries at 1-based positions x and y.
void swap_at(Index& idx, std::size_t x, std::size_t y) { std::swap(idx[x - 1], idx[y - 1]); }

void require_ordered(const GroupSpec& group, const char* what) {
  if (!group.is_ordered()) throw DomainError(std::string(what) + " needs an ordered group, got " + group.describe());
}

std::vector<GroupElement> sorted_distinct(const GroupSpec& group, std::vector<GroupElement> values) {
  for (const auto& v : values) validate_element(group, v);
  std::sort(values.begin(), values.end(), [&](const GroupElement& x, const GroupElement& y) {
    return group_cmp(group, x, y) < 0;
  });
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw UsageError("input elements must be distinct");
  return values;
}

std::vector<GroupElement> negate_reversed(const GroupSpec& group, const std::vector<GroupElement>& a) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(group_neg(group, *it));
  return out;
}

Constraint single(ClauseKind kind, std::int64_t modulus = 0) {
  Constraint c;
  c.clauses.push_back(Clause::rainbow(kind, modulus));
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

Construction zigzag_distances(const std::vector<i128>& values) {
  if (values.empty()) throw UsageError("zigzag_distances: empty input");
  bool increasing = true, decreasing = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) throw UsageError("zigzag_distances: duplicate value " + permlab::to_string(values[i]));
    if (values[i] < values[i - 1]) increasing = false;
    else decreasing = false;
  }
  if (!increasing && !decreasing) throw UsageError("zigzag_distances: input must be monotone");

  const std::size_t n = values.size();
  std::vector<i128> a = values;
  if (!increasing) for (auto& x : a) x = -x;

  // a_1, a_n, a_2, a_{n-1}, ... alternating from both ends.
  std::vector<i128> b;
  b.reserve(n);
  for (std::size_t lo = 0, hi = n - 1; b.size() < n; ++lo, --hi) {
    b.push_back(a[lo]);
    if (b.size() < n) b.push_back(a[hi]);
  }
  if (!increasing) for (auto& x : b) x = -x;

  Arrangement arr = integer_arrangement(Shape::Linear, b);
  Constraint c = single(ClauseKind::RainbowDistance);
  c.pins.first = GroupElement::scalar(values[0]);
  for (std::size_t i = 2; i < n; ++i)
    if (abs128(b[i] - b[i - 1]) >= abs128(b[i - 1] - b[i - 2]))
      throw PostconditionError("zigzag_distances: distances not strictly decreasing");
  return finish(std::move(arr), std::move(c), n % 2 == 0 ? "even" : "odd", integer_set(values));
}

Construction prime_circle_distinct_distances(std::size_t n) {
  if (n == 0) throw UsageError("prime_circle_distinct_distances: n must be positive");
  if (n == 2)
    throw DomainError("prime_circle_distinct_distances: a circle of two elements uses the pair (2, 3) twice, "
                      "so its two distances are equal");
  const auto primes = nt::first_primes(n);
  std::vector<i128> q;
  Constraint c = single(ClauseKind::RainbowDistance);
  c.pins.first = GroupElement::scalar(2);
  if (n == 1) {
    q = {2};
  } else {
    // -p_n < -p_{n-1} < ... < -p_2 arranged with distinct distances gives
    // -q_n, -q_{n-1}, ..., -q_2 with q_n = p_n.
    std::vector<i128> neg;
    for (std::size_t k = n; k >= 2; --k) neg.push_back(-i128(primes[k - 1]));
    const auto z = scalar_values(zigzag_distances(neg).arrangement);
    q.push_back(2);
    for (auto it = z.rbegin(); it != z.rend(); ++it) q.push_back(-*it);
    c.pins.last = GroupElement::scalar(i128(primes[n - 1]));
  }
  std::vector<i128> ps(primes.begin(), primes.end());
  return finish(integer_arrangement(Shape::Circular, q), std::move(c), n == 1 ? "trivial" : "zigzag",
                integer_set(ps));
}

Construction circular_distinct_diffs(std::int64_t n) {
  if (n <= 3) throw DomainError("circular_distinct_diffs requires n > 3");
  std::vector<i128> v;
  std::string branch;
  if (n % 2 == 0) {
    const std::int64_t k = n / 2;
    if (k % 2 == 0) {
      branch = "even-n/k-even";
      for (std::int64_t t = 0; t < k; ++t) {
        v.push_back(t);
        if (t < k - 1) v.push_back(2 * k - 1 - t);
      }
    } else {
      branch = "even-n/k-odd";
      v.push_back(0);
      for (std::int64_t t = 1; t < k; ++t) {
        v.push_back(t);
        v.push_back(2 * k - t);
      }
    }
    v.push_back(k);
    v.push_back(2 * k);
  } else {
    const std::int64_t k = (n - 1) / 2;
    if (k % 2 == 0) {
      branch = "odd-n/k-even";
      for (std::int64_t t = 0; t < k; ++t) {
        v.push_back(t);
        v.push_back(2 * k - t);
      }
      v.push_back(k);
      v.push_back(2 * k + 1);
    } else {
      branch = "odd-n/k-odd";
      v = {0, i128(k), i128(k + 2), i128(k + 1)};
      for (std::int64_t t = 1; t < k; ++t) {
        v.push_back(k - t);
        v.push_back(k + 2 + t);
      }
    }
  }
  Constraint c = single(ClauseKind::RainbowDiff);
  c.pins.first = GroupElement::scalar(0);
  c.pins.last = GroupElement::scalar(n);
  return finish(integer_arrangement(Shape::Circular, v), std::move(c), branch, integer_range(0, n));
}

Construction mod_distinct_diffs(std::int64_t n) {
  if (n < 2) throw UsageError("mod_distinct_diffs requires n >= 2");
  if (n % 2 != 0)
    throw DomainError("no permutation of 1.." + std::to_string(n) +
                      " has adjacent differences distinct mod n: the differences and their negatives both "
                      "cover 1..n-1, so n divides 2(i_1 - i_n), which implies that n is even");
  const std::int64_t m = n / 2;
  std::vector<i128> v{m};
  for (std::int64_t t = 1; t < m; ++t) {
    v.push_back(m - t);
    v.push_back(m + t);
  }
  v.push_back(2 * m);
  return finish(integer_arrangement(Shape::Linear, v), single(ClauseKind::RainbowDiff, n), "even",
                integer_range(1, n));
}

// ---------------------------------------------------------------------------

Construction weighted_sum_cycle(const GroupSpec& group, const std::vector<GroupElement>& values) {
  require_ordered(group, "weighted_sum_cycle");
  const auto a = sorted_distinct(group, values);
  const std::size_t n = a.size();
  if (n <= 3) throw DomainError("weighted_sum_cycle requires more than 3 elements");

  auto A = [&](std::size_t k) -> const GroupElement& { return a[k - 1]; };
  auto W = [&](std::size_t x, std::size_t y) { return group_add(group, A(x), group_scale(group, A(y), 2)); };
  auto gap = [&](std::size_t k) { return group_sub(group, A(k + 1), A(k)); };  // a_{k+1} - a_k

  const GroupElement seam = W(n, 1);
  std::size_t i = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (W(k, k + 1) == seam) i = k;

  Index idx = identity(n);
  std::string branch;
  if (i == 0) {
    branch = "identity";
  } else if (i == 1) {
    branch = "case1";
    swap_at(idx, 2, 3);
  } else if (n == 4) {
    branch = "case2";
    idx = {2, 1, 3, 4};
  } else if (gap(i - 1) != gap(i)) {
    branch = "case3";
    swap_at(idx, i, i + 1);
  } else if (i < n - 2 && gap(i + 1) != gap(i)) {
    branch = "case4";
    swap_at(idx, i + 1, i + 2);
  } else if (i < n - 2) {
    branch = "case5";
    swap_at(idx, i, i + 2);
  } else if (gap(i - 2) != gap(i - 1)) {
    branch = "case6";
    swap_at(idx, i - 1, i);
  } else {
    branch = "case7";
    swap_at(idx, i - 1, i + 1);
  }
  return finish(Arrangement{group, Shape::Circular, pick(a, idx)}, single(ClauseKind::RainbowWeighted), branch,
                values);
}

namespace {

struct TripleResult {
  Index idx;
  std::string branch;
};

// Sorted input a_1 < ... < a_n with n >= 5 and a_{n-1} + a_n + a_1 in S.
TripleResult triple_cases(const GroupSpec& group, const std::vector<GroupElement>& a);

TripleResult triple_dispatch(const GroupSpec& group, const std::vector<GroupElement>& a, int depth);

GroupElement tsum(const GroupSpec& g, const std::vector<GroupElement>& a, std::size_t x, std::size_t y,
                  std::size_t z) {
  return group_add(g, group_add(g, a[x - 1], a[y - 1]), a[z - 1]);
}

// 1-based k in [2, n-1] with a_{k-1} + a_k + a_{k+1} == value, or 0.
std::size_t interior_index(const GroupSpec& g, const std::vector<GroupElement>& a, const GroupElement& value) {
  for (std::size_t k = 2; k + 1 <= a.size(); ++k)
    if (tsum(g, a, k - 1, k, k + 1) == value) return k;
  return 0;
}

TripleResult triple_dispatch(const GroupSpec& group, const std::vector<GroupElement>& a, int depth) {
  const std::size_t n = a.size();
  if (n == 4) return {identity(4), "n4"};
  const bool x_in = interior_index(group, a, tsum(group, a, n, 1, 2)) != 0;
  const bool y_in = interior_index(group, a, tsum(group, a, n - 1, n, 1)) != 0;
  if (!x_in && !y_in) return {identity(n), "identity"};
  if (y_in) return triple_cases(group, a);
  if (depth > 0) throw std::logic_error("triple_sum_cycle: negation applied twice");
  // -a_n < ... < -a_1 swaps the roles of the two seam triples.
  TripleResult r = triple_dispatch(group, negate_reversed(group, a), depth + 1);
  for (auto& k : r.idx) k = n + 1 - k;
  r.branch = "negated/" + r.branch;
  return r;
}

TripleResult triple_cases(const GroupSpec& g, const std::vector<GroupElement>& a) {
  const std::size_t n = a.size();
  auto T = [&](std::size_t x, std::size_t y, std::size_t z) { return tsum(g, a, x, y, z); };
  auto A = [&](std::size_t k) -> const GroupElement& { return a[k - 1]; };
  const GroupElement X = T(n, 1, 2);
  const GroupElement Y = T(n - 1, n, 1);

  if (n == 5) return {{1, 2, 3, 5, 4}, "case1"};
  if (n == 6) {
    if (Y == T(2, 3, 4)) return {{1, 2, 5, 3, 4, 6}, "case2a"};
    return {{1, 2, 3, 4, 6, 5}, "case2b"};
  }
  if (n == 7) {
    if (Y == T(4, 5, 6)) return {{2, 1, 4, 5, 3, 6, 7}, "case3a"};
    if (Y == T(2, 3, 4)) return {{1, 2, 3, 5, 4, 6, 7}, "case3b"};
    if (T(5, 6, 1) != T(2, 3, 4)) return {{1, 2, 3, 4, 7, 5, 6}, "case3c"};
    return {{1, 2, 3, 4, 6, 5, 7}, "case3d"};
  }

  const std::size_t i = interior_index(g, a, Y);
  const std::size_t j = interior_index(g, a, X);
  Index idx = identity(n);
  if (j == 0) {
    if (i + 3 < n) {
      swap_at(idx, i + 1, i + 2);
      return {idx, "case4a"};
    }
    if (X != T(i - 4, i - 3, i - 1)) {
      swap_at(idx, i - 2, i - 1);
      return {idx, "case4b"};
    }
    idx[i - 3] = i;
    idx[i - 2] = i - 2;
    idx[i - 1] = i - 1;
    return {idx, "case4c"};
  }

  if (j + 1 == i || j >= i) throw std::logic_error("triple_sum_cycle: impossible seam collision pattern");
  const std::size_t d = i - j;
  if (d > 5) {
    swap_at(idx, j + 1, j + 2);
    swap_at(idx, i - 2, i - 1);
    return {idx, "case5-gap-gt5"};
  }
  if (d == 5) {
    swap_at(idx, j + 1, j + 2);
    swap_at(idx, j + 3, j + 4);
    return {idx, "case5-gap5"};
  }
  if (d == 4) {
    idx[j] = j + 2;
    idx[j + 1] = j + 3;
    idx[j + 2] = j + 1;
    return {idx, "case5-gap4"};
  }
  if (d == 3) {
    swap_at(idx, j + 1, j + 2);
    return {idx, "case5-gap3"};
  }
  // d == 2
  if (j > 4) {
    idx[j - 3] = j - 1;
    idx[j - 2] = j - 2;
    idx[j - 1] = j + 1;
    idx[j] = j;
    return {idx, "case5-gap2-j-gt4"};
  }
  if (i + 4 <= n) {
    swap_at(idx, i - 1, i);
    swap_at(idx, i + 1, i + 2);
    return {idx, "case5-gap2-interior"};
  }
  if (n == 8 && i == 6) {
    if (group_scale(g, A(5), 2) != group_add(g, A(4), A(7))) return {{1, 2, 3, 4, 6, 7, 5, 8}, "case5-n8-ne"};
    return {{1, 2, 3, 4, 5, 7, 8, 6}, "case5-n8-eq"};
  }
  if (n == 8 && i == 5) {
    // The mirrored sequence -a_8 < ... < -a_1 has the collisions at i=6, j=4.
    TripleResult r = triple_cases(g, negate_reversed(g, a));
    for (auto& k : r.idx) k = n + 1 - k;
    r.branch = "mirror/" + r.branch;
    return r;
  }
  if (n == 9 && i == 6) {
    if (group_scale(g, A(7), 2) != group_add(g, A(8), A(4))) return {{1, 2, 3, 4, 6, 5, 8, 7, 9}, "case5-n9-ne"};
    return {{1, 2, 3, 4, 6, 8, 5, 7, 9}, "case5-n9-eq"};
  }
  throw std::logic_error("triple_sum_cycle: unhandled case n=" + std::to_string(n) + " i=" + std::to_string(i) +
                         " j=" + std::to_string(j));
}

}  // namespace

Construction triple_sum_cycle(const GroupSpec& group, const std::vector<GroupElement>& values) {
  require_ordered(group, "triple_sum_cycle");
  const auto a = sorted_distinct(group, values);
  if (a.size() <= 3) throw DomainError("triple_sum_cycle requires more than 3 elements");
  TripleResult r = triple_dispatch(group, a, 0);
  return finish(Arrangement{group, Shape::Circular, pick(a, r.idx)}, single(ClauseKind::RainbowTriple), r.branch,
                values);
}

// ---------------------------------------------------------------------------

Construction reduced_residue_cycle(std::int64_t n) {
  if (n < 3) throw DomainError("reduced_residue_cycle requires an odd prime power n > 1");
  const auto [p, k] = nt::prime_power_decompose(std::uint64_t(n));
  if (p == 0 || p == 2) throw DomainError(std::to_string(n) + " is not an odd prime power");
  const std::uint64_t un = std::uint64_t(n);
  const std::uint64_t g = nt::find_primitive_root(un);
  const std::uint64_t phi = nt::euler_phi(un);

  const GroupSpec group = GroupSpec::cyclic_product({n});
  Arrangement arr{group, Shape::Circular, {}};
  std::uint64_t power = 1;
  for (std::uint64_t i = 1; i <= phi; ++i) {
    power = nt::mul_mod(power, g, un);
    arr.elements.push_back(GroupElement::scalar(power));
  }
  Constraint c = single(ClauseKind::RainbowDiff);
  c.clauses.push_back(Clause::edge(nt::PredicateSpec::coprime_to(n), LabelerKind::Diff));
  for (const auto& e : arr.elements)
    if (gcd128(e.coords[0], n) != 1) throw PostconditionError("reduced_residue_cycle: element not coprime to n");
  std::vector<GroupElement> residues;
  for (std::int64_t r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) residues.push_back(GroupElement::scalar(r));
  return finish(std::move(arr), std::move(c), "g=" + std::to_string(g), residues);
}

std::string to_string(QrOperation op) { return op == QrOperation::Sum ? "sum" : "diff"; }
std::string to_string(QrTarget target) { return target == QrTarget::Squares ? "S" : "T"; }

QrOperation qr_operation_from_string(const std::string& name) {
  if (name == "sum") return QrOperation::Sum;
  if (name == "diff" || name == "difference") return QrOperation::Difference;
  throw UsageError("unknown operation '" + name + "' (expected sum or diff)");
}

QrTarget qr_target_from_string(const std::string& name) {
  if (name == "S" || name == "squares") return QrTarget::Squares;
  if (name == "T" || name == "nonsquares") return QrTarget::Nonsquares;
  throw UsageError("unknown target '" + name + "' (expected S or T)");
}

std::optional<Construction> qr_cycle(std::int64_t q, QrOperation op, QrTarget target) {
  if (q < 3) throw DomainError("qr_cycle requires an odd prime power q");
  const auto [p, k] = nt::prime_power_decompose(std::uint64_t(q));
  if (p == 0) throw DomainError(std::to_string(q) + " is not a prime power");
  if (p == 2) throw DomainError("qr_cycle is restricted to odd q; for even q every nonzero element is a square");
  if (std::uint64_t(q) > kMaxFieldSize) throw CapacityError("qr_cycle supports q <= 2^20");

  const GroupSpec group =
      k == 1 ? GroupSpec::prime_field(std::int64_t(p)) : GroupSpec::prime_power_field(std::int64_t(p), k);
  const FieldView& f = *group.field();
  const bool want_square = target == QrTarget::Squares;
  auto in_class = [&](std::uint32_t x) { return x != 0 && f.is_square(x) == want_square; };

  for (std::uint32_t g = 1; g < f.q(); ++g) {
    if (!f.is_primitive(g)) continue;
    const std::uint32_t g2 = f.mul(g, g);
    const std::uint32_t factor = op == QrOperation::Sum ? f.add(1, g2) : f.sub(1, g2);
    if (!in_class(factor)) continue;

    Arrangement arr{group, Shape::Circular, {}};
    std::uint32_t x = 1;
    for (std::uint64_t i = 1; i <= (f.q() - 1) / 2; ++i) {
      x = f.mul(x, g2);
      arr.elements.push_back(decode_element(group, x));
    }
    Constraint c = single(op == QrOperation::Sum ? ClauseKind::RainbowSum : ClauseKind::RainbowDiff);
    const auto pred = want_square ? nt::PredicateSpec::field_square(std::int64_t(p), k)
                                  : nt::PredicateSpec::field_nonsquare(std::int64_t(p), k);
    c.clauses.push_back(Clause::edge(pred, op == QrOperation::Sum ? LabelerKind::Sum : LabelerKind::Diff));
    std::vector<GroupElement> squares;
    for (std::uint32_t s : f.squares()) squares.push_back(decode_element(group, s));
    return finish(std::move(arr), std::move(c), "g=" + std::to_string(g), squares);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Construction coprime_circle_odd(std::int64_t n) {
  if (n < 3) throw UsageError("coprime_circle_odd requires n >= 3");
  if (n % 2 == 0) throw DomainError("coprime_circle_odd requires odd n; the even case is open");
  std::vector<i128> v;
  std::string branch;
  if (n % 6 == 1 || n % 6 == 3) {
    branch = "n=1,3 mod 6";
    for (std::int64_t t = 0; 2 * t <= n - 3; ++t) {
      v.push_back(2 * t);
      v.push_back(n - 2 - 2 * t);
    }
    v.push_back(n - 1);
    v.push_back(n);
  } else {
    branch = "n=5 mod 6";
    v.push_back(0);
    for (std::int64_t t = 1; 2 * t - 1 <= n - 2; ++t) {
      v.push_back(2 * t - 1);
      v.push_back(n + 1 - 2 * t);
    }
    v.push_back(n);
  }
  Constraint c;
  c.clauses.push_back(Clause::edge(nt::PredicateSpec::coprime_to((n - 1) * (n + 1)), LabelerKind::Sum));
  c.pins.first = GroupElement::scalar(0);
  c.pins.last = GroupElement::scalar(n);
  return finish(integer_arrangement(Shape::Circular, v), std::move(c), branch, integer_range(0, n));
}

Construction repair_adjacent_sums(const std::vector<i128>& values) {
  const GroupSpec group = GroupSpec::integers();
  const auto a = sorted_distinct(group, integer_set(values));
  const std::size_t n = a.size();
  if (n < 3) throw UsageError("repair_adjacent_sums requires at least 3 elements");
  auto S = [&](std::size_t x, std::size_t y) { return a[x - 1].coords[0] + a[y - 1].coords[0]; };

  std::size_t i = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (S(k, k + 1) == S(n, 1)) i = k;

  Index idx = identity(n);
  std::string branch;
  if (n == 3) {
    branch = "n3";
  } else if (i == 0) {
    branch = "identity";
  } else if (n == 4) {
    branch = "n4";
    idx = {1, 2, 4, 3};
  } else if (i > 2) {
    branch = "swap-before";
    swap_at(idx, i - 1, i);
  } else {
    branch = "swap-after";
    swap_at(idx, i + 1, i + 2);
  }
  return finish(Arrangement{group, Shape::Circular, pick(a, idx)}, single(ClauseKind::RainbowSum), branch,
                integer_set(values));
}

}  // namespace permlab::cons
