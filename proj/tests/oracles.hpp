#pragma once

// Slow, obviously-correct reference implementations. Nothing here calls into
// the library except for plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "permlab/constraint.hpp"

namespace oracle {

using i128 = __int128;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_prime_signed(i128 k) { return k >= 2 && k < (i128(1) << 62) && is_prime(std::uint64_t(k)); }

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

inline std::int64_t mod(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return std::int64_t(r);
}

// Multiplicative order by repeated multiplication; 0 if not a unit.
inline std::uint64_t order(std::int64_t g, std::int64_t n) {
  g = mod(g, n);
  if (std::gcd(g, n) != 1) return 0;
  std::int64_t x = g;
  std::uint64_t k = 1;
  while (x != 1 % n) {
    x = std::int64_t((i128(x) * g) % n);
    ++k;
  }
  return k;
}

inline bool is_primitive_root(i128 g, std::int64_t n) {
  const std::int64_t r = mod(g, n);
  return r != 0 && order(r, n) == phi(std::uint64_t(n));
}

inline bool is_qr(i128 a, std::int64_t p) {
  const std::int64_t r = mod(a, p);
  if (r == 0) return false;
  for (std::int64_t x = 1; x < p; ++x)
    if ((x * x) % p == r) return true;
  return false;
}

inline bool coprime(i128 k, std::int64_t m) {
  i128 a = k < 0 ? -k : k, b = m < 0 ? -m : m;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a == 1;
}

// Integer-valued predicates, written straight from their definitions.
inline bool predicate(const permlab::nt::PredicateSpec& s, i128 k) {
  using K = permlab::nt::PredicateKind;
  switch (s.kind) {
    case K::PrimeShift: return is_prime_signed(i128(s.a) * k + s.b);
    case K::TwinIndex: return is_prime_signed(6 * k - 1) && is_prime_signed(6 * k + 1);
    case K::SophieGermainIndex: return is_prime_signed(6 * k - 1) && is_prime_signed(12 * k - 1);
    case K::PrimitiveRootMod: return is_primitive_root(k, s.p);
    case K::QuadraticResidueMod: return is_qr(k, s.p);
    case K::QuadraticNonresidueMod: return mod(k, s.p) != 0 && !is_qr(k, s.p);
    case K::CoprimeTo: return coprime(k, s.p);
    case K::PrimePredicate: return is_prime_signed(k);
    default: return false;
  }
}

// Polynomials over F_p, coefficients low degree first.
struct Poly {
  std::vector<std::int64_t> c;
};

inline Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  const std::size_t dm = m.c.size() - 1;
  const std::int64_t lead_inv = [&] {
    for (std::int64_t x = 1; x < p; ++x)
      if ((x * m.c.back()) % p == 1) return x;
    return std::int64_t{1};
  }();
  while (a.c.size() > dm) {
    const std::int64_t f = (a.c.back() * lead_inv) % p;
    const std::size_t shift = a.c.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a.c[shift + i] = mod(a.c[shift + i] - f * m.c[i], p);
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.c.empty() || b.c.empty()) return {};
  Poly out{std::vector<std::int64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] = (out.c[i + j] + a.c[i] * b.c[j]) % p;
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

// No monic factor of degree 1..deg/2: brute force over all monic polynomials.
inline bool irreducible(const Poly& m, std::int64_t p) {
  const std::size_t deg = m.c.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly f{std::vector<std::int64_t>(d + 1, 0)};
      f.c[d] = 1;
      std::int64_t x = code;
      for (std::size_t i = 0; i < d; ++i) {
        f.c[i] = x % p;
        x /= p;
      }
      if (poly_mod(m, f, p).c.empty()) return false;
    }
  }
  return true;
}

inline std::vector<i128> values(const permlab::Arrangement& a) {
  std::vector<i128> v;
  for (const auto& x : a.elements) v.push_back(x.coords.at(0));
  return v;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edges(std::size_t n, permlab::Shape shape) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (shape == permlab::Shape::Linear) {
    for (std::size_t i = 0; i + 1 < n; ++i) out.emplace_back(i, i + 1);
  } else {
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(i, (i + 1) % n);
  }
  return out;
}

inline std::vector<i128> edge_args(permlab::LabelerKind kind, std::int64_t offset, i128 x, i128 y) {
  using L = permlab::LabelerKind;
  switch (kind) {
    case L::Sum: return {x + y};
    case L::Diff: return {x - y};
    case L::AbsDiffAndSum: return {x > y ? x - y : y - x, x + y};
    case L::SquarePlus: return {x * x + y};
    case L::SquareMinus: return {x * x - y};
    case L::ProductMinusOne: return {x * y - 1};
    case L::TwoProductMinusOne: return {2 * x * y - 1};
    case L::TwoProductPlusOne: return {2 * x * y + 1};
    case L::AffineProduct: return {offset + x * y};
    case L::AbsSquareDiff: return {x * x > y * y ? x * x - y * y : y * y - x * x};
  }
  return {};
}

// Full satisfaction test for integer problems (group = integers).
inline bool satisfies(const std::vector<i128>& v, permlab::Shape shape, const permlab::Constraint& c) {
  using CK = permlab::ClauseKind;
  const std::size_t n = v.size();
  if (c.pins.first && v.front() != c.pins.first->coords[0]) return false;
  if (c.pins.last && v.back() != c.pins.last->coords[0]) return false;
  const auto es = edges(n, shape);
  for (const auto& cl : c.clauses) {
    std::vector<i128> labels;
    auto put = [&](i128 x) { labels.push_back(cl.modulus ? i128(mod(x, cl.modulus)) : x); };
    switch (cl.kind) {
      case CK::RainbowSum: for (auto [i, j] : es) put(v[i] + v[j]); break;
      case CK::RainbowDiff: for (auto [i, j] : es) put(v[i] - v[j]); break;
      case CK::RainbowDistance: for (auto [i, j] : es) put(v[i] > v[j] ? v[i] - v[j] : v[j] - v[i]); break;
      case CK::RainbowWeighted: for (auto [i, j] : es) put(v[i] + 2 * v[j]); break;
      case CK::RainbowProduct: for (auto [i, j] : es) put(v[i] * v[j]); break;
      case CK::RainbowTriple:
        if (shape == permlab::Shape::Linear) {
          for (std::size_t i = 0; i + 2 < n; ++i) put(v[i] + v[i + 1] + v[i + 2]);
        } else if (n >= 3) {
          for (std::size_t i = 0; i < n; ++i) put(v[i] + v[(i + 1) % n] + v[(i + 2) % n]);
        }
        break;
      case CK::EdgePredicate:
        for (auto [i, j] : es)
          for (i128 k : edge_args(cl.labeler.kind, cl.labeler.offset, v[i], v[j]))
            if (!predicate(cl.predicate, k)) return false;
        break;
    }
    std::set<i128> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) return false;
  }
  return true;
}

// Number of satisfying permutations of an integer ground set, counting every
// rotation and reflection separately.
inline std::uint64_t count_raw(std::vector<i128> ground, permlab::Shape shape, const permlab::Constraint& c) {
  std::sort(ground.begin(), ground.end());
  std::uint64_t count = 0;
  do {
    if (satisfies(ground, shape, c)) ++count;
  } while (std::next_permutation(ground.begin(), ground.end()));
  return count;
}

}  // namespace oracle
