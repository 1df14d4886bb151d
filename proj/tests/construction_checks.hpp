#pragma once

// Independent validators and random input generators for the explicit
// constructions. Validators return an empty string on success and a reason
// otherwise. They recompute every label from plain integers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permlab/algebra.hpp"
#include "permlab/constructions.hpp"

namespace ccheck {

using i128 = __int128;

inline std::string str(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

inline std::string str(const std::vector<i128>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + str(v[i]);
  return out + ")";
}

template <class T>
bool all_distinct(const std::vector<T>& v) {
  return std::set<T>(v.begin(), v.end()).size() == v.size();
}

inline bool same_multiset(std::vector<i128> a, std::vector<i128> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline i128 iabs(i128 x) { return x < 0 ? -x : x; }

// Ordered-group elements are compared lexicographically; each element here is
// a coordinate vector (rank 1 for integers).
using Vec = std::vector<i128>;

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline std::vector<Vec> coords(const permlab::Arrangement& a) {
  std::vector<Vec> out;
  for (const auto& e : a.elements) out.push_back(e.coords);
  return out;
}

inline std::vector<Vec> coords(const std::vector<permlab::GroupElement>& v) {
  std::vector<Vec> out;
  for (const auto& e : v) out.push_back(e.coords);
  return out;
}

inline std::string is_permutation_of(std::vector<Vec> out, std::vector<Vec> in) {
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  return out == in ? "" : "output is not a permutation of the input";
}

// --- validators --------------------------------------------------------------

inline std::string zigzag(const std::vector<i128>& input, const permlab::cons::Construction& c) {
  const auto b = oracle::values(c.arrangement);
  if (c.arrangement.shape != permlab::Shape::Linear) return "not linear";
  if (!same_multiset(b, input)) return "not a permutation of the input";
  if (b.front() != input.front()) return "does not start at the first input value";
  for (std::size_t i = 2; i < b.size(); ++i)
    if (iabs(b[i] - b[i - 1]) >= iabs(b[i - 1] - b[i - 2])) return "distances not strictly decreasing at " + std::to_string(i);
  return "";
}

inline std::vector<i128> first_primes(std::size_t n) {
  std::vector<i128> out;
  for (std::uint64_t k = 2; out.size() < n; ++k)
    if (oracle::is_prime(k)) out.push_back(i128(k));
  return out;
}

inline std::string prime_circle(std::size_t n, const permlab::cons::Construction& c) {
  const auto q = oracle::values(c.arrangement);
  const auto primes = first_primes(n);
  if (!same_multiset(q, primes)) return "not a permutation of the first n primes";
  if (q.front() != 2 || q.back() != primes.back()) return "endpoints are not 2 and p_n";
  std::vector<i128> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(iabs(q[i] - q[(i + 1) % n]));
  if (!all_distinct(d)) return "distances repeat";
  return "";
}

inline std::string circular_diffs(std::int64_t n, const permlab::cons::Construction& c) {
  const auto v = oracle::values(c.arrangement);
  std::vector<i128> range;
  for (std::int64_t k = 0; k <= n; ++k) range.push_back(k);
  if (!same_multiset(v, range)) return "not a permutation of 0..n";
  if (v.front() != 0 || v.back() != n) return "endpoints are not 0 and n";
  std::vector<i128> d;
  for (std::size_t i = 0; i < v.size(); ++i) d.push_back(v[i] - v[(i + 1) % v.size()]);
  return all_distinct(d) ? "" : "signed differences repeat";
}

inline std::string mod_diffs(std::int64_t n, const permlab::cons::Construction& c) {
  const auto v = oracle::values(c.arrangement);
  std::vector<i128> range;
  for (std::int64_t k = 1; k <= n; ++k) range.push_back(k);
  if (!same_multiset(v, range)) return "not a permutation of 1..n";
  std::vector<i128> d;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(oracle::mod(v[i + 1] - v[i], n));
  return all_distinct(d) ? "" : "differences repeat mod n";
}

inline std::string weighted(const std::vector<Vec>& input, const permlab::cons::Construction& c) {
  const auto b = coords(c.arrangement);
  if (auto e = is_permutation_of(b, input); !e.empty()) return e;
  std::vector<Vec> w;
  for (std::size_t i = 0; i < b.size(); ++i) w.push_back(vadd(b[i], vadd(b[(i + 1) % b.size()], b[(i + 1) % b.size()])));
  return all_distinct(w) ? "" : "weighted sums repeat";
}

inline std::string triple(const std::vector<Vec>& input, const permlab::cons::Construction& c) {
  const auto b = coords(c.arrangement);
  if (auto e = is_permutation_of(b, input); !e.empty()) return e;
  const std::size_t n = b.size();
  std::vector<Vec> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(vadd(b[i], vadd(b[(i + 1) % n], b[(i + 2) % n])));
  return all_distinct(t) ? "" : "triple sums repeat";
}

inline std::string reduced_residue(std::int64_t n, const permlab::cons::Construction& c) {
  const auto a = oracle::values(c.arrangement);
  std::vector<i128> units;
  for (std::int64_t r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) units.push_back(r);
  if (!same_multiset(a, units)) return "elements are not a reduced residue system";
  std::vector<i128> d;
  for (std::size_t i = 0; i < a.size(); ++i) d.push_back(oracle::mod(a[i] - a[(i + 1) % a.size()], n));
  if (!same_multiset(d, units)) return "differences are not a reduced residue system";
  return "";
}

inline std::string coprime_circle(std::int64_t n, const permlab::cons::Construction& c) {
  const auto v = oracle::values(c.arrangement);
  std::vector<i128> range;
  for (std::int64_t k = 0; k <= n; ++k) range.push_back(k);
  if (!same_multiset(v, range)) return "not a permutation of 0..n";
  if (v.front() != 0 || v.back() != n) return "endpoints are not 0 and n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    const i128 s = v[i] + v[(i + 1) % v.size()];
    if (!oracle::coprime(s, n - 1) || !oracle::coprime(s, n + 1)) return "sum " + str(s) + " shares a factor";
  }
  return "";
}

inline std::string repair(const std::vector<i128>& input, const permlab::cons::Construction& c) {
  const auto b = oracle::values(c.arrangement);
  if (!same_multiset(b, input)) return "not a permutation of the input";
  std::vector<i128> s;
  for (std::size_t i = 0; i < b.size(); ++i) s.push_back(b[i] + b[(i + 1) % b.size()]);
  if (!all_distinct(s)) return "sums repeat";
  // At most one transposition away from sorted order, except the n = 4 ordering
  // (a1, a2, a4, a3) which is also a single transposition.
  std::vector<i128> sorted = input;
  std::sort(sorted.begin(), sorted.end());
  std::size_t moved = 0;
  for (std::size_t i = 0; i < b.size(); ++i) moved += b[i] != sorted[i];
  if (moved != 0 && moved != 2) return "more than one transposition from sorted order";
  return "";
}

// Field arithmetic for F_{p^k} as polynomials modulo the field's modulus.
struct FieldOracle {
  std::int64_t p = 0;
  oracle::Poly modulus;
  std::size_t degree = 1;

  oracle::Poly from_code(std::uint32_t code) const {
    oracle::Poly out;
    while (code) {
      out.c.push_back(std::int64_t(code % std::uint32_t(p)));
      code /= std::uint32_t(p);
    }
    return out;
  }
  std::uint32_t to_code(const oracle::Poly& f) const {
    std::uint32_t code = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) code = code * std::uint32_t(p) + std::uint32_t(f.c[i]);
    return code;
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (degree == 1) return std::uint32_t((std::uint64_t(x) * y) % std::uint64_t(p));
    return to_code(oracle::poly_mod(oracle::poly_mul(from_code(x), from_code(y), p), modulus, p));
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y, int sign) const {
    auto a = from_code(x), b = from_code(y);
    a.c.resize(degree, 0);
    b.c.resize(degree, 0);
    oracle::Poly out;
    for (std::size_t i = 0; i < degree; ++i) out.c.push_back(oracle::mod(a.c[i] + sign * b.c[i], p));
    while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
    return to_code(out);
  }
};

inline std::string qr(std::int64_t q, permlab::cons::QrOperation op, permlab::cons::QrTarget target,
                      const permlab::cons::Construction& c) {
  const auto& group = c.arrangement.group;
  const permlab::FieldView* view = group.field();
  if (!view) return "not a field arrangement";
  FieldOracle f;
  f.p = std::int64_t(view->p());
  f.degree = view->degree();
  if (f.degree > 1) {
    f.modulus.c = view->modulus();
    if (!oracle::irreducible(f.modulus, f.p)) return "field modulus is reducible";
  }
  if (std::int64_t(view->q()) != q) return "wrong field size";
  std::set<std::uint32_t> squares;
  for (std::uint32_t x = 1; x < std::uint32_t(q); ++x) squares.insert(f.mul(x, x));
  std::vector<std::uint32_t> a;
  for (const auto& e : c.arrangement.elements) a.push_back(std::uint32_t(permlab::encode_element(group, e)));
  if (std::set<std::uint32_t>(a.begin(), a.end()) != squares || a.size() != squares.size())
    return "elements are not the nonzero squares";
  const int sign = op == permlab::cons::QrOperation::Sum ? 1 : -1;
  std::vector<std::uint32_t> labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint32_t l = f.add(a[i], a[(i + 1) % a.size()], sign);
    const bool want_square = target == permlab::cons::QrTarget::Squares;
    if (l == 0 || (squares.count(l) == 1) != want_square) return "label outside the target class";
    labels.push_back(l);
  }
  return all_distinct(labels) ? "" : "labels repeat";
}

// --- generators --------------------------------------------------------------

inline std::vector<i128> distinct_sorted(std::mt19937_64& rng, std::size_t n, i128 lo, i128 hi) {
  std::uniform_int_distribution<std::int64_t> d{std::int64_t(lo), std::int64_t(hi)};
  std::set<i128> s;
  while (s.size() < n) s.insert(d(rng));
  return {s.begin(), s.end()};
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random value bound: mostly small ranges (which make collisions likely),
// sometimes values near the element bound.
inline i128 random_span(std::mt19937_64& rng, std::size_t n) {
  switch (pick(rng, 0, 3)) {
    case 0: return i128(2 * n + 2);
    case 1: return i128(10 * n);
    case 2: return i128(1) << 20;
    default: return i128(1) << 38;
  }
}

inline std::vector<i128> zigzag_input(std::mt19937_64& rng, std::size_t max_n = 64) {
  const std::size_t n = pick(rng, 1, max_n);
  const i128 span = random_span(rng, n);
  auto v = distinct_sorted(rng, n, -span, span);
  if (pick(rng, 0, 1)) std::reverse(v.begin(), v.end());
  return v;
}

// Ordered-group input: integers (rank 1) or lex-ordered pairs (rank 2).
struct OrderedInput {
  permlab::GroupSpec group;
  std::vector<permlab::GroupElement> values;
};

inline OrderedInput ordered_input(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  const std::size_t n = pick(rng, min_n, max_n);
  OrderedInput in{permlab::GroupSpec::integers(), {}};
  const std::size_t mode = pick(rng, 0, 4);
  std::vector<i128> v;
  if (mode == 4) {
    // Arithmetic progression, possibly with one perturbed term.
    const i128 d = i128(pick(rng, 1, 5)), start = i128(pick(rng, 0, 20)) - 10;
    for (std::size_t k = 0; k < n; ++k) v.push_back(start + d * i128(k));
    if (pick(rng, 0, 1)) v[pick(rng, 0, n - 1)] += i128(n) * d * 3;
  } else {
    const i128 span = random_span(rng, n);
    v = distinct_sorted(rng, n, -span, span);
  }
  if (pick(rng, 0, 3) == 0) {
    // Rank-2 vectors: the first coordinate has few values so the second one matters.
    in.group = permlab::GroupSpec::integer_vectors(2);
    std::set<std::pair<i128, i128>> seen;
    for (i128 x : v) {
      std::pair<i128, i128> e{x % 3, x};
      if (seen.insert(e).second) in.values.push_back(permlab::GroupElement({e.first, e.second}));
    }
  } else {
    in.values = permlab::integer_set(v);
  }
  std::shuffle(in.values.begin(), in.values.end(), rng);
  return in;
}

inline std::vector<i128> repair_input(std::mt19937_64& rng, std::size_t max_n = 64) {
  const std::size_t n = pick(rng, 3, max_n);
  const i128 span = random_span(rng, n);
  auto v = distinct_sorted(rng, n, -span, span);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

inline std::vector<std::int64_t> odd_prime_powers(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 3; n <= limit; n += 2) {
    std::int64_t p = 3;
    while (n % p) p += 2;
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) out.push_back(n);
  }
  return out;
}

}  // namespace ccheck
