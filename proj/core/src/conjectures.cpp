#include "permlab/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "permlab/constructions.hpp"
#include "permlab/errors.hpp"
#include "permlab/numtheory.hpp"
#include "permlab/version.hpp"

namespace permlab::conj {

namespace {

const std::vector<std::string> kIds = {"3.1",  "3.2",  "3.3",  "3.4",  "3.5",  "3.6",  "3.7",
                                       "3.8",  "3.9",  "3.10", "3.11", "3.12", "3.13", "3.14",
                                       "3.15", "3.16", "3.17", "3.18", "filz", "thm1.6-range"};

std::int64_t get(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

std::int64_t get_or(const Params& params, const std::string& key, std::int64_t fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

bool has(const Params& params, const std::string& key) { return params.count(key) != 0; }

std::int64_t part_of(const Params& params, std::int64_t parts) {
  const std::int64_t part = get_or(params, "part", 1);
  if (part < 1 || part > parts)
    throw UsageError("parameter 'part' must be in 1.." + std::to_string(parts));
  return part;
}

std::int64_t require_at_least(const Params& params, const std::string& key, std::int64_t lo) {
  const std::int64_t v = get(params, key);
  if (v < lo) throw UsageError("parameter '" + key + "' must be at least " + std::to_string(lo));
  return v;
}

std::int64_t require_prime(const Params& params, const std::string& key) {
  const std::int64_t v = get(params, key);
  if (v < 2 || !nt::is_prime(std::uint64_t(v))) throw UsageError("parameter '" + key + "' must be prime");
  return v;
}

// Integer ground sets: a mask over [-m, m], explicit x0, x1, ..., or nothing.
std::vector<i128> integer_values(const Params& params) {
  std::vector<i128> values;
  if (has(params, "mask")) {
    const std::int64_t m = get(params, "m");
    if (m < 0 || m > 30) throw UsageError("parameter 'm' must be in 0..30");
    const std::uint64_t mask = std::uint64_t(get(params, "mask"));
    if (mask == 0 || (mask >> (2 * m + 1)) != 0) throw UsageError("parameter 'mask' out of range for m");
    for (std::int64_t t = 0; t <= 2 * m; ++t)
      if ((mask >> t) & 1) values.push_back(t - m);
  } else {
    for (int k = 0; has(params, "x" + std::to_string(k)); ++k) values.push_back(get(params, "x" + std::to_string(k)));
    if (values.empty()) throw UsageError("integer set needs 'm' and 'mask' or explicit x0, x1, ...");
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw UsageError("integer set has repeated values");
  for (i128 v : values)
    if (abs128(v) > kElementBound) throw UsageError("integer set value exceeds 2^40 in magnitude");
  return values;
}

// Finite abelian groups: moduli m1, m2, ... and an optional mask over encodings.
GroupSpec group_from(const Params& params) {
  std::vector<std::int64_t> moduli;
  for (int k = 1; has(params, "m" + std::to_string(k)); ++k) moduli.push_back(get(params, "m" + std::to_string(k)));
  if (moduli.empty()) throw UsageError("group needs moduli m1, m2, ...");
  const GroupSpec g = GroupSpec::cyclic_product(moduli);
  if (g.order() > 63) throw UsageError("group order must be at most 63");
  return g;
}

std::vector<GroupElement> group_subset(const GroupSpec& g, const Params& params) {
  const auto all = all_elements(g);
  if (!has(params, "mask")) return all;
  const std::uint64_t mask = std::uint64_t(get(params, "mask"));
  if (mask == 0 || (g.order() < 64 && (mask >> g.order()) != 0)) throw UsageError("parameter 'mask' out of range");
  std::vector<GroupElement> out;
  for (std::size_t e = 0; e < all.size(); ++e)
    if ((mask >> e) & 1) out.push_back(all[e]);
  return out;
}

Constraint rainbow(ClauseKind kind) {
  Constraint c;
  c.clauses.push_back(Clause::rainbow(kind));
  return c;
}

Constraint predicate(nt::PredicateSpec spec, LabelerKind labeler, std::int64_t offset = 0) {
  Constraint c;
  c.clauses.push_back(Clause::edge(spec, Labeler{labeler, offset}));
  return c;
}

GroupSpec field_group(std::uint64_t p, std::uint32_t k) {
  return k == 1 ? GroupSpec::prime_field(std::int64_t(p)) : GroupSpec::prime_power_field(std::int64_t(p), k);
}

std::pair<std::uint64_t, std::uint32_t> require_prime_power(const Params& params, const std::string& key) {
  const std::int64_t q = get(params, key);
  if (q < 2) throw UsageError("parameter '" + key + "' must be a prime power");
  const auto pk = nt::prime_power_decompose(std::uint64_t(q));
  if (pk.first == 0) throw UsageError("parameter '" + key + "' must be a prime power");
  if (std::uint64_t(q) > kMaxFieldSize) throw CapacityError("fields are limited to q <= 2^20");
  return pk;
}

nt::PredicateSpec primitive_in(std::uint64_t p, std::uint32_t k) {
  return k == 1 ? nt::PredicateSpec::primitive_root_mod(std::int64_t(p))
                : nt::PredicateSpec::field_primitive(std::int64_t(p), k);
}

bool symmetric(std::vector<i128> v) {
  std::vector<i128> neg;
  for (i128 x : v) neg.push_back(-x);
  std::sort(neg.begin(), neg.end());
  return neg == v;
}

// {±s, ±t}, {r, ±s, ±t}, {±r, ±s, ±t}: the forms excluded from the
// sum-and-product / difference-and-product statements.
bool exceptional_form(const std::vector<i128>& v, std::int64_t part) {
  const std::size_t n = v.size();
  if (n == 4) return symmetric(v);
  if (part == 2) return false;
  if (n == 6) return symmetric(v);
  if (n == 5) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<i128> rest;
      for (std::size_t k = 0; k < n; ++k)
        if (k != r) rest.push_back(v[k]);
      if (symmetric(rest)) return true;
    }
  }
  return false;
}

Instance make(const std::string& id, const Params& params, std::string description) {
  Instance inst;
  inst.id = id;
  inst.params = params;
  inst.description = std::move(description);
  return inst;
}

void set_problem(Instance& inst, GroupSpec group, std::vector<GroupElement> ground, Shape shape, Constraint c) {
  inst.problem = Problem{std::move(group), std::move(ground), shape, std::move(c)};
}

Instance integer_circle(const std::string& id, const Params& params, std::string description, i128 lo, i128 hi,
                        Constraint c) {
  Instance inst = make(id, params, std::move(description));
  set_problem(inst, GroupSpec::integers(), integer_range(lo, hi), Shape::Circular, std::move(c));
  return inst;
}

Instance build(const std::string& id, const Params& params) {
  if (id == "3.1") {
    const auto v = integer_values(params);
    const std::int64_t first = get_or(params, "first", 0);
    if (first < 0 || std::size_t(first) >= v.size()) throw UsageError("parameter 'first' out of range");
    Instance inst = make(id, params, "linear, distinct distances, b_1 fixed");
    Constraint c = rainbow(ClauseKind::RainbowDistance);
    c.pins.first = GroupElement::scalar(v[std::size_t(first)]);
    set_problem(inst, GroupSpec::integers(), integer_set(v), Shape::Linear, std::move(c));
    return inst;
  }
  if (id == "3.2") {
    const auto v = integer_values(params);
    Instance inst = make(id, params, "circular distinct distances with min and max adjacent");
    Constraint c = rainbow(ClauseKind::RainbowDistance);
    inst.hypothesis = Problem{GroupSpec::integers(), integer_set(v), Shape::Circular, c};
    c.pins.first = GroupElement::scalar(v.front());
    if (v.size() > 1) c.pins.last = GroupElement::scalar(v.back());
    set_problem(inst, GroupSpec::integers(), integer_set(v), Shape::Circular, std::move(c));
    return inst;
  }
  if (id == "3.3" || id == "3.4" || id == "3.5" || id == "3.6") {
    const GroupSpec g = group_from(params);
    auto ground = group_subset(g, params);
    const std::uint64_t n = ground.size(), order = g.order();
    Instance inst = make(id, params, "");
    if (id == "3.3") {
      inst.description = "linear distinct differences, b_1 fixed, in " + g.describe();
      const std::int64_t first = get_or(params, "first", 0);
      if (first < 0 || std::uint64_t(first) >= n) throw UsageError("parameter 'first' out of range");
      if (order % n == 0 && !(n % 2 == 0 && sylow2_cyclic(g)))
        inst.skipped = "n divides |G| and not (n even with cyclic Sylow 2-subgroup)";
      Constraint c = rainbow(ClauseKind::RainbowDiff);
      c.pins.first = ground[std::size_t(first)];
      set_problem(inst, g, std::move(ground), Shape::Linear, std::move(c));
    } else if (id == "3.4") {
      const auto part = part_of(params, 2);
      inst.description = std::string(part == 1 ? "circular distinct sums" : "circular distinct differences") +
                         " in " + g.describe();
      if (n % 2 == 0 && order % n == 0) inst.skipped = "n even and n divides |G|";
      else if (part == 2 && !(3 < n && n < order)) inst.skipped = "needs 3 < n < |G|";
      set_problem(inst, g, std::move(ground), Shape::Circular,
                  rainbow(part == 1 ? ClauseKind::RainbowSum : ClauseKind::RainbowDiff));
    } else if (id == "3.5") {
      const auto part = part_of(params, 2);
      if (n <= 3) inst.skipped = "needs n > 3";
      if (part == 1) {
        inst.description = "circular distinct a_i + 2a_{i+1} in " + g.describe();
        if (order % 3 == 0) inst.skipped = "|G| divisible by 3";
        set_problem(inst, g, std::move(ground), Shape::Circular, rainbow(ClauseKind::RainbowWeighted));
      } else {
        inst.description = "two numberings with distinct a_i + 2b_i in " + g.describe();
        if (n > kPairingLimit) throw CapacityError("pairing instances are limited to 6 elements");
        inst.pairing = true;
        set_problem(inst, g, std::move(ground), Shape::Linear, rainbow(ClauseKind::RainbowWeighted));
      }
    } else {
      inst.description = "circular distinct triple sums in " + g.describe();
      if (n <= 3) inst.skipped = "needs n > 3";
      set_problem(inst, g, std::move(ground), Shape::Circular, rainbow(ClauseKind::RainbowTriple));
    }
    return inst;
  }
  if (id == "3.7") {
    const auto part = part_of(params, 3);
    if (part == 1) {
      const auto [p, k] = require_prime_power(params, "q");
      const std::int64_t q = get(params, "q");
      Instance inst = make(id, params, "all of F_q, adjacent sums primitive");
      if (q <= 7) inst.skipped = "needs q > 7";
      const GroupSpec g = field_group(p, k);
      set_problem(inst, g, all_elements(g), Shape::Circular, predicate(primitive_in(p, k), LabelerKind::Sum));
      return inst;
    }
    const std::int64_t p = require_prime(params, "p");
    if (p == 2) throw UsageError("parameter 'p' must be odd");
    const bool sums = part == 2;
    Instance inst = integer_circle(id, params, sums ? "1..n, sums primitive roots mod p" : "1..n, differences primitive roots mod p",
                                   1, (p - 1) / 2,
                                   predicate(nt::PredicateSpec::primitive_root_mod(p), sums ? LabelerKind::Sum : LabelerKind::Diff));
    if (sums ? p <= 19 : p <= 13) inst.skipped = sums ? "needs p > 19" : "needs p > 13";
    return inst;
  }
  if (id == "3.8") {
    const auto part = part_of(params, 2);
    const std::int64_t p = require_prime(params, "p");
    if (p == 2) throw UsageError("parameter 'p' must be odd");
    const bool sums = part == 1;
    Instance inst = make(id, params, sums ? "quadratic residues, sums primitive roots" : "quadratic residues, differences primitive roots");
    if (sums ? p <= 19 : p <= 13) inst.skipped = sums ? "needs p > 19" : "needs p > 13";
    const GroupSpec g = GroupSpec::prime_field(p);
    std::vector<GroupElement> squares;
    for (std::uint32_t s : g.field()->squares()) squares.push_back(GroupElement::scalar(s));
    set_problem(inst, g, std::move(squares), Shape::Circular,
                predicate(nt::PredicateSpec::primitive_root_mod(p), sums ? LabelerKind::Sum : LabelerKind::Diff));
    return inst;
  }
  if (id == "3.9") {
    const auto part = part_of(params, 4);
    const std::int64_t p = require_prime(params, "p");
    if (p == 2) throw UsageError("parameter 'p' must be odd");
    const bool plus = part == 1 || part == 3;
    const auto spec = part <= 2 ? nt::PredicateSpec::quadratic_residue_mod(p) : nt::PredicateSpec::primitive_root_mod(p);
    Instance inst = integer_circle(id, params,
                                   std::string(plus ? "1..n, i^2 + j " : "1..n, i^2 - j ") +
                                       (part <= 2 ? "quadratic residues" : "primitive roots"),
                                   1, (p - 1) / 2, predicate(spec, plus ? LabelerKind::SquarePlus : LabelerKind::SquareMinus));
    if (part <= 2 ? p <= 11 : p <= 13) inst.skipped = part <= 2 ? "needs p > 11" : "needs p > 13";
    return inst;
  }
  if (id == "3.10") {
    const auto [p, k] = require_prime_power(params, "q");
    const std::int64_t q = get(params, "q");
    const std::int64_t a0 = get_or(params, "a0", 0);
    if (a0 < 0 || a0 >= q) throw UsageError("parameter 'a0' must be a field encoding in 0..q-1");
    Instance inst = make(id, params, "nonzero F_q, a0 + a_i a_{i+1} primitive");
    if (q <= 7) inst.skipped = "needs q > 7";
    const GroupSpec g = field_group(p, k);
    auto ground = all_elements(g);
    ground.erase(ground.begin());
    set_problem(inst, g, std::move(ground), Shape::Circular, predicate(primitive_in(p, k), LabelerKind::AffineProduct, a0));
    return inst;
  }
  if (id == "3.11") {
    const auto part = part_of(params, 3);
    const std::int64_t n = require_at_least(params, "n", 1);
    if (part == 3) {
      const std::int64_t m = require_at_least(params, "coprime", 0);
      return integer_circle(id, params, "0..n circular, sums coprime to " + std::to_string(m), 0, n,
                            predicate(nt::PredicateSpec::coprime_to(m), LabelerKind::Sum));
    }
    const std::int64_t m = part == 1 ? (n - 1) * (n + 1) : (2 * n - 1) * (2 * n + 1);
    Constraint c = predicate(nt::PredicateSpec::coprime_to(m), LabelerKind::Sum);
    c.pins.first = GroupElement::scalar(0);
    c.pins.last = GroupElement::scalar(n);
    Instance inst = integer_circle(id, params,
                                   part == 1 ? "0..n, 0 first, n last, sums coprime to n-1 and n+1"
                                             : "0..n, 0 first, n last, sums coprime to 2n-1 and 2n+1 (guessed variant)",
                                   0, n, std::move(c));
    if (part == 1 && (n == 2 || n == 4)) inst.skipped = "n = 2 and n = 4 are excluded";
    return inst;
  }
  if (id == "3.12") {
    const auto part = part_of(params, 2);
    const auto v = integer_values(params);
    if (std::find(v.begin(), v.end(), i128{0}) != v.end()) throw UsageError("elements must be nonzero");
    Instance inst = make(id, params, part == 1 ? "circular distinct sums and distinct products"
                                               : "circular distinct differences and distinct products");
    Constraint c;
    c.clauses.push_back(Clause::rainbow(part == 1 ? ClauseKind::RainbowSum : ClauseKind::RainbowDiff));
    c.clauses.push_back(Clause::rainbow(ClauseKind::RainbowProduct));
    if (part == 1 ? v.size() <= 2 : v.size() <= 3) inst.skipped = part == 1 ? "needs n > 2" : "needs n > 3";
    inst.expect_exhausted = exceptional_form(v, part);
    set_problem(inst, GroupSpec::integers(), integer_set(v), Shape::Circular, std::move(c));
    return inst;
  }
  if (id == "3.13") {
    const std::int64_t n = require_at_least(params, "n", 1);
    return integer_circle(id, params, "0..n, sums k with 6k-1, 6k+1 twin primes", 0, n,
                          predicate(nt::PredicateSpec::twin_index(), LabelerKind::Sum));
  }
  if (id == "3.14") {
    const std::int64_t n = require_at_least(params, "n", 1);
    Instance inst = integer_circle(id, params, "0..n, sums (p+1)/6 with p a Sophie Germain prime", 0, n,
                                   predicate(nt::PredicateSpec::sophie_germain_index(), LabelerKind::Sum));
    if (n <= 2) inst.skipped = "needs n > 2";
    return inst;
  }
  if (id == "3.15") {
    const auto part = part_of(params, 2);
    const std::int64_t n = require_at_least(params, "n", 1);
    Instance inst = integer_circle(id, params,
                                   part == 1 ? "0..n, |i-j| and i+j of the form (p-1)/2"
                                             : "0..n, |i^2-j^2| of the form (p-1)/2",
                                   0, n,
                                   predicate(nt::PredicateSpec::prime_shift(2, 1),
                                             part == 1 ? LabelerKind::AbsDiffAndSum : LabelerKind::AbsSquareDiff));
    if (part == 2 && (n == 2 || n == 4)) inst.skipped = "n = 2 and n = 4 are excluded";
    return inst;
  }
  if (id == "3.16" || id == "3.17") {
    const std::int64_t n = require_at_least(params, "n", 1);
    const auto part = id == "3.16" ? 2 : part_of(params, 2);
    const auto spec = id == "3.16"   ? nt::PredicateSpec::prime_shift(2, 1)
                      : part == 1    ? nt::PredicateSpec::prime_shift(4, 1)
                                     : nt::PredicateSpec::prime_shift(4, -1);
    Constraint c = predicate(spec, LabelerKind::SquarePlus);
    if (part == 2) {
      // With 0 first the last element is forced to be 1
      // (see multiple_of_three_lemma_holds).
      c.pins.first = GroupElement::scalar(0);
      c.pins.last = GroupElement::scalar(1);
    }
    const std::string what = id == "3.16" ? "(p-1)/2, p an odd prime" : part == 1 ? "(p-1)/4, p = 1 mod 4 prime" : "(p+1)/4, p = 3 mod 4 prime";
    Instance inst = integer_circle(id, params, "0..n, i^2 + j of the form " + what + (part == 2 ? ", 0 first, 1 last" : ""),
                                   0, n, std::move(c));
    if (id == "3.16" && n == 4) inst.skipped = "n = 4 is excluded";
    return inst;
  }
  if (id == "3.18") {
    const auto part = part_of(params, 3);
    const std::int64_t n = require_at_least(params, "n", 1);
    const LabelerKind lab = part == 1   ? LabelerKind::ProductMinusOne
                            : part == 2 ? LabelerKind::TwoProductMinusOne
                                        : LabelerKind::TwoProductPlusOne;
    Instance inst = integer_circle(id, params,
                                   part == 1   ? "1..n, i*j - 1 prime"
                                   : part == 2 ? "1..n, 2ij - 1 prime"
                                               : "1..n, 2ij + 1 prime",
                                   1, n, predicate(nt::PredicateSpec::prime(), lab));
    if (part == 1 && (n <= 5 || n == 13)) inst.skipped = "needs n > 5, n != 13";
    if (part == 2 && n <= 1) inst.skipped = "needs n > 1";
    if (part == 3 && n == 4) inst.skipped = "n = 4 is excluded";
    return inst;
  }
  if (id == "filz") {
    const std::int64_t n = require_at_least(params, "n", 1);
    Instance inst = integer_circle(id, params, "1..n, adjacent sums prime", 1, n,
                                   predicate(nt::PredicateSpec::prime(), LabelerKind::Sum));
    if (n % 2 != 0) inst.skipped = "n must be even";
    return inst;
  }
  if (id == "thm1.6-range") {
    const auto [p, k] = require_prime_power(params, "q");
    const std::int64_t q = get(params, "q");
    const std::int64_t op = get_or(params, "op", 0), target = get_or(params, "target", 0);
    if ((op != 0 && op != 1) || (target != 0 && target != 1))
      throw UsageError("parameters 'op' (0 sum, 1 diff) and 'target' (0 S, 1 T) must be 0 or 1");
    Instance inst = make(id, params, std::string("squares of F_q, distinct ") + (op == 0 ? "sums" : "differences") +
                                         " all in " + (target == 0 ? "S" : "T"));
    if (p == 2) {
      inst.skipped = "q must be odd";
      set_problem(inst, GroupSpec::integers(), integer_range(0, 0), Shape::Circular, rainbow(ClauseKind::RainbowSum));
      return inst;
    }
    if (q <= 13) inst.skipped = "needs q > 13";
    const GroupSpec g = field_group(p, k);
    std::vector<GroupElement> squares;
    for (std::uint32_t s : g.field()->squares()) squares.push_back(decode_element(g, s));
    std::sort(squares.begin(), squares.end());
    Constraint c = rainbow(op == 0 ? ClauseKind::RainbowSum : ClauseKind::RainbowDiff);
    const auto spec = target == 0 ? nt::PredicateSpec::field_square(std::int64_t(p), k)
                                  : nt::PredicateSpec::field_nonsquare(std::int64_t(p), k);
    c.clauses.push_back(Clause::edge(spec, op == 0 ? LabelerKind::Sum : LabelerKind::Diff));
    set_problem(inst, g, std::move(squares), Shape::Circular, std::move(c));
    return inst;
  }
  throw UsageError("unknown conjecture id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& conjecture_ids() { return kIds; }

bool is_conjecture_id(const std::string& id) { return std::find(kIds.begin(), kIds.end(), id) != kIds.end(); }

std::string params_help(const std::string& id) {
  if (id == "3.1") return "m, mask (subset of [-m, m]) or x0, x1, ...; first (index of b_1 in the sorted set)";
  if (id == "3.2") return "m, mask or x0, x1, ...";
  if (id == "3.3") return "m1, m2, ... (group Z/m1 x Z/m2 x ...), mask (subset by encoding), first";
  if (id == "3.4") return "m1, m2, ..., mask; part 1 (sums) or 2 (differences)";
  if (id == "3.5") return "m1, m2, ..., mask; part 1 (a_i + 2a_{i+1}) or 2 (two numberings, n <= 6)";
  if (id == "3.6") return "m1, m2, ..., mask";
  if (id == "3.7") return "part 1 with q; part 2 (sums) or 3 (differences) with prime p";
  if (id == "3.8") return "p; part 1 (sums) or 2 (differences)";
  if (id == "3.9") return "p; part 1 (i^2+j QR), 2 (i^2-j QR), 3 (i^2+j primitive), 4 (i^2-j primitive)";
  if (id == "3.10") return "q, a0 (field encoding)";
  if (id == "3.11") return "n; part 1 (n+-1), 2 (2n+-1, guessed), 3 with coprime (literal modulus, no pins)";
  if (id == "3.12") return "m, mask or x0, x1, ... (nonzero); part 1 (sums) or 2 (differences)";
  if (id == "3.13" || id == "3.14" || id == "3.16" || id == "filz") return "n";
  if (id == "3.15" || id == "3.17") return "n; part 1 or 2";
  if (id == "3.18") return "n; part 1 (ij-1), 2 (2ij-1), 3 (2ij+1)";
  if (id == "thm1.6-range") return "q; op 0 (sum) or 1 (diff); target 0 (S) or 1 (T)";
  throw UsageError("unknown conjecture id '" + id + "'");
}

Instance instance(const std::string& id, const Params& params) {
  Instance inst = build(id, params);
  if (!inst.skipped || inst.problem.ground.size() > 0) inst.problem.validate();
  if (inst.hypothesis) inst.hypothesis->validate();
  return inst;
}

std::string to_string(RecordStatus status) {
  switch (status) {
    case RecordStatus::Witness: return "witness";
    case RecordStatus::Exhausted: return "exhausted";
    case RecordStatus::Budget: return "budget";
    case RecordStatus::SkippedPrecondition: return "skipped-precondition";
  }
  return "?";
}

RecordStatus record_status_from_string(const std::string& name) {
  for (auto s : {RecordStatus::Witness, RecordStatus::Exhausted, RecordStatus::Budget, RecordStatus::SkippedPrecondition})
    if (to_string(s) == name) return s;
  throw UsageError("unknown record status '" + name + "'");
}

namespace {

RecordStatus from_search(SearchStatus s) {
  switch (s) {
    case SearchStatus::Witness: return RecordStatus::Witness;
    case SearchStatus::Exhausted: return RecordStatus::Exhausted;
    case SearchStatus::BudgetExceeded: return RecordStatus::Budget;
  }
  return RecordStatus::Budget;
}

bool pairing_witness_ok(const Instance& inst, const std::vector<GroupElement>& partners) {
  auto a = inst.problem.ground;
  std::sort(a.begin(), a.end());
  if (partners.size() != a.size()) return false;
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], partners[i]);
  return check_pairing(inst.problem.group, inst.problem.ground, pairs);
}

bool witness_ok(const Instance& inst, const std::vector<GroupElement>& witness) {
  if (inst.pairing) return pairing_witness_ok(inst, witness);
  return check(Arrangement{inst.problem.group, inst.problem.shape, witness}, inst.problem).pass;
}

}  // namespace

Record run_instance(const Instance& inst, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  Record rec;
  rec.conjecture = inst.id;
  rec.params = inst.params;
  rec.tool_version = kToolVersion;
  auto done = [&]() -> Record {
    rec.elapsed_ms = std::uint64_t(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    if (rec.witness && !witness_ok(inst, *rec.witness))
      throw std::logic_error("witness for " + inst.id + " failed re-check before emission");
    return rec;
  };

  if (inst.skipped) {
    rec.status = RecordStatus::SkippedPrecondition;
    return done();
  }
  if (inst.pairing) {
    const PairingOutcome out = search_pairing(inst.problem.group, inst.problem.ground, budget);
    rec.status = from_search(out.status);
    rec.nodes = out.nodes;
    if (out.status == SearchStatus::Witness) {
      std::vector<GroupElement> partners;
      for (const auto& pr : out.pairs) partners.push_back(pr.second);
      rec.witness = std::move(partners);
    }
    return done();
  }
  if (inst.id == "thm1.6-range") {
    const auto q = get(inst.params, "q");
    const auto op = get_or(inst.params, "op", 0) == 0 ? cons::QrOperation::Sum : cons::QrOperation::Difference;
    const auto target = get_or(inst.params, "target", 0) == 0 ? cons::QrTarget::Squares : cons::QrTarget::Nonsquares;
    if (auto built = cons::qr_cycle(q, op, target)) {
      rec.status = RecordStatus::Witness;
      rec.witness = built->arrangement.elements;
      return done();
    }
  }
  std::uint64_t remaining = budget;
  if (inst.hypothesis) {
    const SearchOutcome h = search(*inst.hypothesis, SearchOptions{remaining});
    rec.nodes += h.nodes;
    if (h.status == SearchStatus::BudgetExceeded) {
      rec.status = RecordStatus::Budget;
      return done();
    }
    if (h.status == SearchStatus::Exhausted) {
      rec.status = RecordStatus::SkippedPrecondition;
      return done();
    }
    remaining = budget > h.nodes ? budget - h.nodes : 1;
  }
  const SearchOutcome out = search(inst.problem, SearchOptions{remaining});
  rec.nodes += out.nodes;
  rec.status = from_search(out.status);
  if (out.witness) rec.witness = out.witness->elements;
  return done();
}

Record run(const std::string& id, const Params& params, std::uint64_t budget) {
  return run_instance(instance(id, params), budget);
}

bool recheck(const Record& record) {
  if (record.status != RecordStatus::Witness) return !record.witness.has_value();
  if (!record.witness) return false;
  const Instance inst = instance(record.conjecture, record.params);
  try {
    return witness_ok(inst, *record.witness);
  } catch (const UsageError&) {
    return false;
  }
}

bool expected_exhausted(const std::string& id, const Params& params) {
  if (id == "3.11" && get_or(params, "part", 1) == 3)
    return get_or(params, "n", 0) == 7 && get_or(params, "coprime", 0) == 90;
  if (id != "3.12") return false;
  return exceptional_form(integer_values(params), get_or(params, "part", 1));
}

// Ranges --------------------------------------------------------------------

namespace {

std::vector<std::int64_t> primes_in(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = std::max<std::int64_t>(from, 2); p <= to; ++p)
    if (nt::is_prime(std::uint64_t(p))) out.push_back(p);
  return out;
}

std::vector<std::int64_t> prime_powers_in(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = std::max<std::int64_t>(from, 2); q <= to; ++q)
    if (nt::prime_power_decompose(std::uint64_t(q)).first != 0) out.push_back(q);
  return out;
}

// Adds `key` = each value, unless the caller fixed it.
std::vector<Params> fan_out(const std::vector<Params>& base, const std::string& key,
                            const std::vector<std::int64_t>& values, const Params& fixed) {
  if (fixed.count(key)) return base;
  std::vector<Params> out;
  for (const auto& p : base)
    for (auto v : values) {
      Params q = p;
      q[key] = v;
      out.push_back(q);
    }
  return out;
}

constexpr std::size_t kMaxExhaustiveSubset = 7;

// Subsets of [-m, m] of size <= 7 that use -m or m, so that consecutive m
// never repeat a set.
std::vector<Params> integer_subsets(std::int64_t m, bool nonzero) {
  std::vector<Params> out;
  const int width = int(2 * m + 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
    if (std::popcount(mask) > int(kMaxExhaustiveSubset)) continue;
    if (m > 0 && !((mask & 1) || ((mask >> (2 * m)) & 1))) continue;
    if (nonzero && ((mask >> m) & 1)) continue;
    out.push_back(Params{{"m", m}, {"mask", std::int64_t(mask)}});
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::int64_t index) {
  return (seed * 0x9E3779B97F4A7C15ULL) ^ std::uint64_t(index);
}

Params random_integer_set(std::uint64_t seed, std::int64_t index, bool nonzero) {
  std::mt19937_64 rng(mix_seed(seed, index));
  const std::size_t size = 2 + std::size_t(rng() % 11);
  const std::int64_t bound = 1000;
  std::set<std::int64_t> values;
  while (values.size() < size) {
    const std::int64_t v = std::int64_t(rng() % std::uint64_t(2 * bound + 1)) - bound;
    if (nonzero && v == 0) continue;
    values.insert(v);
  }
  Params p{{"seed", index}};
  int k = 0;
  for (auto v : values) p["x" + std::to_string(k++)] = v;
  return p;
}

// Non-cyclic abelian groups of this order in invariant-factor form
// m_1 | m_2 | ... | m_k, k >= 2.
void invariant_factor_lists(std::int64_t rest, std::int64_t last, std::vector<std::int64_t>& cur,
                            std::vector<std::vector<std::int64_t>>& out) {
  if (rest == 1) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (std::int64_t d = last; d <= rest; d += last) {
    if (rest % d != 0) continue;
    cur.push_back(d);
    invariant_factor_lists(rest / d, d, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::int64_t>> noncyclic_groups(std::int64_t order) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  for (std::int64_t d = 2; d <= order; ++d) {
    if (order % d != 0) continue;
    cur.push_back(d);
    invariant_factor_lists(order / d, d, cur, out);
    cur.pop_back();
  }
  return out;
}

Params group_params(const std::vector<std::int64_t>& moduli) {
  Params p;
  for (std::size_t i = 0; i < moduli.size(); ++i) p["m" + std::to_string(i + 1)] = moduli[i];
  return p;
}

Params random_group_subset(std::uint64_t seed, std::int64_t index) {
  static const std::vector<std::vector<std::int64_t>> kGroups = [] {
    std::vector<std::vector<std::int64_t>> g;
    for (std::int64_t m = 4; m <= 36; ++m) g.push_back({m});
    for (std::int64_t order = 4; order <= 36; ++order)
      for (auto& m : noncyclic_groups(order)) g.push_back(m);
    return g;
  }();
  std::mt19937_64 rng(mix_seed(seed, index));
  const auto& moduli = kGroups[rng() % kGroups.size()];
  std::uint64_t order = 1;
  for (auto m : moduli) order *= std::uint64_t(m);
  const std::uint64_t size = 4 + rng() % std::min<std::uint64_t>(order - 3, 9);
  std::set<std::uint64_t> picked;
  while (picked.size() < size) picked.insert(rng() % order);
  std::uint64_t mask = 0;
  for (auto e : picked) mask |= std::uint64_t{1} << e;
  Params p = group_params(moduli);
  p["seed"] = index;
  p["mask"] = std::int64_t(mask);
  return p;
}

std::vector<Params> merge_fixed(std::vector<Params> list, const Params& fixed) {
  for (auto& p : list)
    for (const auto& [k, v] : fixed) p[k] = v;
  return list;
}

std::vector<std::int64_t> parts_of(const std::string& id) {
  if (id == "3.4" || id == "3.5" || id == "3.8" || id == "3.12" || id == "3.15" || id == "3.17") return {1, 2};
  if (id == "3.7" || id == "3.18") return {1, 2, 3};
  if (id == "3.9") return {1, 2, 3, 4};
  return {};
}

}  // namespace

std::vector<std::string> families(const std::string& id) {
  if (id == "3.1" || id == "3.2") return {"subsets", "random"};
  if (id == "3.12") return {"subsets", "random", "exceptional"};
  if (id == "3.3" || id == "3.4" || id == "3.5" || id == "3.6") return {"cyclic", "products", "random"};
  if (id == "3.7" || id == "3.10" || id == "thm1.6-range") return {"prime-powers", "primes"};
  if (id == "3.11") return {"conjecture", "guess", "literal"};
  if (!is_conjecture_id(id)) throw UsageError("unknown conjecture id '" + id + "'");
  return {"default"};
}

std::vector<Params> enumerate_range(const std::string& id, const RangeSpec& range) {
  const auto fams = families(id);
  const std::string family = range.family.empty() ? fams.front() : range.family;
  if (std::find(fams.begin(), fams.end(), family) == fams.end())
    throw UsageError("conjecture " + id + " has no instance family '" + family + "'");
  if (range.from > range.to) throw UsageError("empty range");
  const Params& fixed = range.fixed;
  std::vector<Params> out;
  auto with_parts = [&](std::vector<Params> base) {
    const auto parts = parts_of(id);
    return parts.empty() ? base : fan_out(base, "part", parts, fixed);
  };

  if (id == "3.1" || id == "3.2" || id == "3.12") {
    const bool nonzero = id == "3.12";
    std::vector<Params> sets;
    if (family == "subsets") {
      if (range.from < 0 || range.to > 6) throw UsageError("subset family supports m in 0..6");
      for (std::int64_t m = range.from; m <= range.to; ++m)
        for (auto& p : integer_subsets(m, nonzero)) sets.push_back(p);
    } else if (family == "random") {
      for (std::int64_t i = range.from; i <= range.to; ++i) sets.push_back(random_integer_set(range.seed, i, nonzero));
    } else {  // exceptional forms with entries bounded by t
      for (std::int64_t t = std::max<std::int64_t>(range.from, 2); t <= range.to; ++t)
        for (std::int64_t s = 1; s < t; ++s) {
          sets.push_back(Params{{"x0", -t}, {"x1", -s}, {"x2", s}, {"x3", t}});
          for (std::int64_t r = -t; r <= t; ++r)
            if (r != 0 && r != s && r != -s && r != t && r != -t)
              sets.push_back(Params{{"x0", -t}, {"x1", -s}, {"x2", s}, {"x3", t}, {"x4", r}});
          for (std::int64_t r = 1; r < s; ++r)
            sets.push_back(Params{{"x0", -t}, {"x1", -s}, {"x2", -r}, {"x3", r}, {"x4", s}, {"x5", t}});
        }
    }
    if (id == "3.1" && !fixed.count("first")) {
      for (const auto& p : sets) {
        const auto n = integer_values(p).size();
        for (std::size_t f = 0; f < n; ++f) {
          Params q = p;
          q["first"] = std::int64_t(f);
          out.push_back(q);
        }
      }
    } else {
      out = sets;
    }
    if (id == "3.12") {
      out = with_parts(out);
      if (family == "exceptional") {
        // Part 2 excludes only the four-element form.
        std::vector<Params> kept;
        for (auto& p : out)
          if (get_or(p, "part", get_or(fixed, "part", 1)) == 1 || !has(p, "x4")) kept.push_back(p);
        out = kept;
      }
    }
    return merge_fixed(out, fixed);
  }

  if (id == "3.3" || id == "3.4" || id == "3.5" || id == "3.6") {
    const std::size_t min_n = (id == "3.5" || id == "3.6") ? 4 : 1;
    std::vector<Params> sets;
    if (family == "cyclic") {
      if (range.from < 2 || range.to > 16) throw UsageError("cyclic family supports m in 2..16");
      for (std::int64_t m = range.from; m <= range.to; ++m)
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
          const auto n = std::size_t(std::popcount(mask));
          if (n < min_n) continue;
          Params p{{"m1", m}, {"mask", std::int64_t(mask)}};
          sets.push_back(p);
        }
    } else if (family == "products") {
      if (range.from < 1 || range.to > 36) throw UsageError("products family supports orders up to 36");
      for (std::int64_t order = std::max<std::int64_t>(range.from, 2); order <= range.to; ++order) {
        sets.push_back(group_params({order}));
        for (auto& m : noncyclic_groups(order)) sets.push_back(group_params(m));
      }
    } else {
      for (std::int64_t i = range.from; i <= range.to; ++i) sets.push_back(random_group_subset(range.seed, i));
    }
    sets = merge_fixed(sets, fixed);
    if (id == "3.3" && !fixed.count("first")) {
      for (const auto& p : sets) {
        const auto n = group_subset(group_from(p), p).size();
        for (std::size_t f = 0; f < n; ++f) {
          Params q = p;
          q["first"] = std::int64_t(f);
          out.push_back(q);
        }
      }
      return out;
    }
    out = with_parts(sets);
    if (id == "3.5") {
      // Pairings are searched for at most six elements.
      std::vector<Params> kept;
      for (auto& p : out)
        if (get_or(p, "part", 1) == 1 || group_subset(group_from(p), p).size() <= kPairingLimit) kept.push_back(p);
      out = kept;
    }
    return merge_fixed(out, fixed);
  }

  if (id == "3.7") {
    std::vector<std::int64_t> parts = fixed.count("part") ? std::vector<std::int64_t>{fixed.at("part")}
                                                          : std::vector<std::int64_t>{1, 2, 3};
    for (auto part : parts) {
      if (part == 1) {
        for (auto q : family == "primes" ? primes_in(range.from, range.to) : prime_powers_in(range.from, range.to))
          out.push_back(Params{{"part", 1}, {"q", q}});
      } else {
        for (auto p : primes_in(std::max<std::int64_t>(range.from, 3), range.to))
          out.push_back(Params{{"part", part}, {"p", p}});
      }
    }
    return merge_fixed(out, fixed);
  }
  if (id == "3.8" || id == "3.9") {
    for (auto p : primes_in(std::max<std::int64_t>(range.from, 3), range.to)) out.push_back(Params{{"p", p}});
    return merge_fixed(with_parts(out), fixed);
  }
  if (id == "3.10") {
    for (auto q : family == "primes" ? primes_in(range.from, range.to) : prime_powers_in(range.from, range.to)) {
      if (fixed.count("a0")) out.push_back(Params{{"q", q}});
      else
        for (std::int64_t a0 = 0; a0 < q; ++a0) out.push_back(Params{{"q", q}, {"a0", a0}});
    }
    return merge_fixed(out, fixed);
  }
  if (id == "thm1.6-range") {
    for (auto q : family == "primes" ? primes_in(range.from, range.to) : prime_powers_in(range.from, range.to)) {
      if (q % 2 == 0) continue;
      out.push_back(Params{{"q", q}});
    }
    out = fan_out(out, "op", {0, 1}, fixed);
    out = fan_out(out, "target", {0, 1}, fixed);
    return merge_fixed(out, fixed);
  }
  if (id == "3.11") {
    if (family == "literal" && !fixed.count("coprime")) throw UsageError("the literal family needs a fixed 'coprime'");
    const std::int64_t part = family == "conjecture" ? 1 : family == "guess" ? 2 : 3;
    for (std::int64_t n = std::max<std::int64_t>(range.from, 1); n <= range.to; ++n)
      out.push_back(Params{{"n", n}, {"part", part}});
    return merge_fixed(out, fixed);
  }
  // n-indexed families
  for (std::int64_t n = std::max<std::int64_t>(range.from, 1); n <= range.to; ++n) {
    if (id == "filz" && n % 2 != 0) continue;
    out.push_back(Params{{"n", n}});
  }
  return merge_fixed(with_parts(out), fixed);
}

// Campaign ------------------------------------------------------------------

void run_campaign(const std::vector<Task>& tasks, const CampaignOptions& options,
                  const std::function<void(const Record&)>& sink) {
  if (options.jobs < 1) throw UsageError("jobs must be at least 1");
  const std::size_t total = tasks.size();
  std::vector<std::optional<Record>> results(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      std::optional<Record> rec;
      std::exception_ptr err;
      try {
        rec = run(tasks[i].id, tasks[i].params, options.budget);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(rec);
        errors[i] = err;
        if (!results[i] && !errors[i]) errors[i] = std::make_exception_ptr(std::logic_error("no result"));
      }
      cv.notify_all();
    }
  };

  const std::size_t threads = std::min(options.jobs, std::max<std::size_t>(total, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);

  std::exception_ptr first_error;
  for (std::size_t i = 0; i < total; ++i) {
    std::optional<Record> rec;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return results[i].has_value() || errors[i] != nullptr; });
      if (errors[i]) {
        first_error = errors[i];
        next.store(total);
        break;
      }
      rec = std::move(results[i]);
      results[i].reset();
    }
    try {
      sink(*rec);
    } catch (...) {
      first_error = std::current_exception();
      next.store(total);
      break;
    }
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Fixtures ------------------------------------------------------------------

const std::vector<GoldenFixture>& golden_fixtures() {
  static const std::vector<GoldenFixture> kFixtures = {
      {"F_11, sums primitive", "3.7", {{"part", 1}, {"q", 11}}, {0, 6, 7, 1, 5, 3, 10, 8, 9, 4, 2}},
      {"1..11, i^2 + j primitive mod 23", "3.9", {{"part", 3}, {"p", 23}}, {1, 6, 7, 11, 4, 5, 3, 8, 10, 9, 2}},
      {"1..11, i^2 - j primitive mod 23", "3.9", {{"part", 4}, {"p", 23}}, {1, 9, 7, 5, 11, 10, 3, 2, 6, 8, 4}},
      {"nonzero F_11, ij - 1 primitive", "3.10", {{"q", 11}, {"a0", 10}}, {1, 9, 2, 4, 5, 8, 10, 3, 6, 7}},
      {"0..9, |i-j| and i+j shifted primes", "3.15", {{"part", 1}, {"n", 9}}, {0, 1, 2, 3, 5, 4, 7, 8, 6, 9}},
      {"0..5, |i^2-j^2| shifted primes", "3.15", {{"part", 2}, {"n", 5}}, {0, 1, 4, 5, 2, 3}},
      {"0..20, i^2 + j shifted primes", "3.16", {{"n", 20}}, {0, 3, 12, 9, 15, 18, 6, 20, 19, 14, 13, 4, 2, 7, 16, 17, 11, 10, 5, 8, 1}},
      {"0..9, i^2 + j = (p-1)/4", "3.17", {{"part", 1}, {"n", 9}}, {0, 1, 2, 3, 4, 6, 9, 7, 8, 5}},
      {"0..9, i^2 + j = (p+1)/4", "3.17", {{"part", 2}, {"n", 9}}, {0, 3, 6, 9, 2, 4, 5, 8, 7, 1}},
      {"1..23, ij - 1 prime", "3.18", {{"part", 1}, {"n", 23}},
       {1, 6, 23, 10, 9, 22, 11, 18, 13, 14, 21, 2, 15, 4, 17, 16, 5, 12, 7, 20, 19, 8, 3}},
      {"primes 11..29, distinct distances", "3.2",
       {{"x0", 11}, {"x1", 13}, {"x2", 17}, {"x3", 19}, {"x4", 23}, {"x5", 29}}, {11, 13, 29, 17, 23, 19}, true},
      {"primes 11..29, distinct distances, min and max adjacent", "3.2",
       {{"x0", 11}, {"x1", 13}, {"x2", 17}, {"x3", 19}, {"x4", 23}, {"x5", 29}}, {11, 19, 17, 13, 23, 29}},
  };
  return kFixtures;
}

std::vector<CounterexampleFixture> counterexample_fixtures() {
  std::vector<CounterexampleFixture> out;
  {
    const GroupSpec klein = GroupSpec::cyclic_product({2, 2});
    Constraint c = rainbow(ClauseKind::RainbowDiff);
    out.push_back({"Klein four-group, distinct differences", "3.3", Params{{"m1", 2}, {"m2", 2}},
                   Problem{klein, all_elements(klein), Shape::Linear, c}});
  }
  const std::vector<std::pair<std::string, Params>> registry = {
      {"{+-1,+-2}, sums and products", {{"part", 1}, {"x0", -2}, {"x1", -1}, {"x2", 1}, {"x3", 2}}},
      {"{3,+-1,+-2}, sums and products",
       {{"part", 1}, {"x0", -2}, {"x1", -1}, {"x2", 1}, {"x3", 2}, {"x4", 3}}},
      {"{+-1,+-2,+-3}, sums and products",
       {{"part", 1}, {"x0", -3}, {"x1", -2}, {"x2", -1}, {"x3", 1}, {"x4", 2}, {"x5", 3}}},
      {"{+-1,+-2}, differences and products", {{"part", 2}, {"x0", -2}, {"x1", -1}, {"x2", 1}, {"x3", 2}}},
  };
  for (const auto& [name, params] : registry) out.push_back({name, "3.12", params, instance("3.12", params).problem});
  const Params literal{{"part", 3}, {"n", 7}, {"coprime", 90}};
  out.push_back({"0..7 circular, sums coprime to 90", "3.11", literal, instance("3.11", literal).problem});
  return out;
}

std::vector<FixtureResult> run_fixtures(std::uint64_t budget) {
  std::vector<FixtureResult> out;
  for (const auto& f : golden_fixtures()) {
    FixtureResult r{f.name, false, ""};
    const Instance inst = instance(f.id, f.params);
    const Problem& problem = f.hypothesis ? *inst.hypothesis : inst.problem;
    Arrangement arr{problem.group, problem.shape, {}};
    for (auto x : f.elements) arr.elements.push_back(GroupElement::scalar(x));
    const CheckReport report = check(arr, problem);
    r.pass = report.pass;
    r.detail = "golden " + f.id + " " + permlab::to_string(arr) + (report.pass ? " passes" : " FAILS: " + report.message);
    out.push_back(r);
  }
  for (const auto& f : counterexample_fixtures()) {
    FixtureResult r{f.name, false, ""};
    const SearchOutcome s = search(f.problem, SearchOptions{budget});
    r.pass = s.status == SearchStatus::Exhausted;
    r.detail = "counterexample " + f.id + " " + permlab::to_string(s.status) + " nodes=" + std::to_string(s.nodes);
    out.push_back(r);
  }
  return out;
}

bool multiple_of_three_lemma_holds(const nt::PredicateSpec& spec, std::int64_t n) {
  for (std::int64_t x = 0; x <= n; ++x)
    for (std::int64_t y = 0; y <= n; y += 3) {
      if (x + y <= 1) continue;
      if (nt::eval_predicate_lenient(spec, i128(x) * x + y) && x % 3 != 0) return false;
    }
  return true;
}

}  // namespace permlab::conj
