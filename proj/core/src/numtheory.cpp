#include "permlab/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "permlab/algebra.hpp"
#include "permlab/errors.hpp"

namespace permlab::nt {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), table_(limit + 1, true) {
  if (limit < 2) throw UsageError("primes_upto: limit must be at least 2");
  table_[0] = table_[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!table_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) table_[j] = false;
  }
}

std::vector<std::uint64_t> PrimeSieve::primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit_; ++i)
    if (table_[i]) out.push_back(i);
  return out;
}

std::size_t PrimeSieve::count() const {
  std::size_t c = 0;
  for (std::uint64_t i = 2; i <= limit_; ++i) c += table_[i] ? 1 : 0;
  return c;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return std::uint64_t(u128(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeSieve primes_upto(std::uint64_t limit) { return PrimeSieve(limit); }

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t k = 2; out.size() < count; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    if (n % p == 0) {
      out.push_back(p);
      factor_into(n / p, out);
      return;
    }
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw UsageError("factorize: n must be positive");
  std::vector<std::uint64_t> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (std::uint64_t p : primes) {
    if (!f.empty() && f.back().prime == p)
      ++f.back().exponent;
    else
      f.push_back({p, 1});
  }
  return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw UsageError("euler_phi: n must be at least 1");
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t n) {
  if (n < 2) return {0, 0};
  const auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return {f[0].prime, f[0].exponent};
}

bool has_primitive_root(std::uint64_t n) {
  if (n == 2 || n == 4) return true;
  if (n < 2) return false;
  std::uint64_t odd = n % 2 == 0 ? n / 2 : n;
  if (odd % 2 == 0) return false;
  return prime_power_decompose(odd).first > 2;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t n) {
  if (!has_primitive_root(n)) throw DomainError("is_primitive_root: " + std::to_string(n) + " has no primitive roots");
  if (std::gcd(g % n, n) != 1) throw DomainError("is_primitive_root: gcd(g, n) != 1");
  const std::uint64_t phi = euler_phi(n);
  for (const auto& [q, e] : factorize(phi)) {
    if (pow_mod(g, phi / q, n) == 1) return false;
  }
  // phi(2) = 1 has no prime divisors; the only unit mod 2 generates.
  return true;
}

std::uint64_t find_primitive_root(std::uint64_t n) {
  if (!has_primitive_root(n)) throw DomainError("find_primitive_root: " + std::to_string(n) + " has no primitive roots");
  if (n == 2) return 1;
  for (std::uint64_t g = 2; g < n; ++g) {
    if (std::gcd(g, n) == 1 && is_primitive_root(g, n)) return g;
  }
  throw DomainError("find_primitive_root: none found");
}

bool is_quadratic_residue(i128 a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("is_quadratic_residue: modulus must be an odd prime");
  const auto r = std::uint64_t(mod_floor(a, i128(p)));
  if (r == 0) throw DomainError("is_quadratic_residue: p divides a");
  return pow_mod(r, (p - 1) / 2, p) == 1;
}

PredicateSpec PredicateSpec::prime_shift(std::int64_t a, std::int64_t b) {
  PredicateSpec s;
  s.kind = PredicateKind::PrimeShift;
  s.a = a;
  s.b = b;
  return s;
}
PredicateSpec PredicateSpec::twin_index() {
  PredicateSpec s;
  s.kind = PredicateKind::TwinIndex;
  return s;
}
PredicateSpec PredicateSpec::sophie_germain_index() {
  PredicateSpec s;
  s.kind = PredicateKind::SophieGermainIndex;
  return s;
}
PredicateSpec PredicateSpec::primitive_root_mod(std::int64_t p) {
  PredicateSpec s;
  s.kind = PredicateKind::PrimitiveRootMod;
  s.p = p;
  return s;
}
PredicateSpec PredicateSpec::quadratic_residue_mod(std::int64_t p) {
  PredicateSpec s;
  s.kind = PredicateKind::QuadraticResidueMod;
  s.p = p;
  return s;
}
PredicateSpec PredicateSpec::quadratic_nonresidue_mod(std::int64_t p) {
  PredicateSpec s;
  s.kind = PredicateKind::QuadraticNonresidueMod;
  s.p = p;
  return s;
}
PredicateSpec PredicateSpec::coprime_to(std::int64_t m) {
  PredicateSpec s;
  s.kind = PredicateKind::CoprimeTo;
  s.p = m;
  return s;
}
PredicateSpec PredicateSpec::prime() { return PredicateSpec{}; }

namespace {
PredicateSpec field_kind(PredicateKind kind, std::int64_t p, std::int64_t degree) {
  PredicateSpec s;
  s.kind = kind;
  s.p = p;
  s.degree = degree;
  return s;
}
}  // namespace

PredicateSpec PredicateSpec::field_primitive(std::int64_t p, std::int64_t degree) {
  return field_kind(PredicateKind::FieldPrimitive, p, degree);
}
PredicateSpec PredicateSpec::field_square(std::int64_t p, std::int64_t degree) {
  return field_kind(PredicateKind::FieldSquare, p, degree);
}
PredicateSpec PredicateSpec::field_nonsquare(std::int64_t p, std::int64_t degree) {
  return field_kind(PredicateKind::FieldNonsquare, p, degree);
}

bool PredicateSpec::is_modular() const {
  switch (kind) {
    case PredicateKind::PrimitiveRootMod:
    case PredicateKind::QuadraticResidueMod:
    case PredicateKind::QuadraticNonresidueMod:
    case PredicateKind::FieldPrimitive:
    case PredicateKind::FieldSquare:
    case PredicateKind::FieldNonsquare:
      return true;
    default:
      return false;
  }
}

void PredicateSpec::validate() const {
  switch (kind) {
    case PredicateKind::PrimeShift:
      if (a == 0) throw UsageError("PrimeShift requires a != 0");
      break;
    case PredicateKind::PrimitiveRootMod:
      if (p < 2 || !has_primitive_root(std::uint64_t(p)))
        throw UsageError("PrimitiveRootMod requires a modulus with primitive roots");
      break;
    case PredicateKind::QuadraticResidueMod:
    case PredicateKind::QuadraticNonresidueMod:
      if (p < 3 || !is_prime(std::uint64_t(p))) throw UsageError("residue predicates require an odd prime modulus");
      break;
    case PredicateKind::CoprimeTo:
      if (p < 0) throw UsageError("CoprimeTo requires m >= 0");
      break;
    case PredicateKind::FieldPrimitive:
    case PredicateKind::FieldSquare:
    case PredicateKind::FieldNonsquare: {
      if (p < 2 || !is_prime(std::uint64_t(p)) || degree < 1)
        throw UsageError("field predicates require a prime characteristic and degree >= 1");
      if (kind != PredicateKind::FieldPrimitive && p == 2)
        throw UsageError("square classes are only defined here for odd characteristic");
      break;
    }
    default:
      break;
  }
}

std::string to_string(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::PrimeShift: return "prime_shift";
    case PredicateKind::TwinIndex: return "twin_index";
    case PredicateKind::SophieGermainIndex: return "sophie_germain_index";
    case PredicateKind::PrimitiveRootMod: return "primitive_root_mod";
    case PredicateKind::QuadraticResidueMod: return "quadratic_residue_mod";
    case PredicateKind::QuadraticNonresidueMod: return "quadratic_nonresidue_mod";
    case PredicateKind::CoprimeTo: return "coprime_to";
    case PredicateKind::PrimePredicate: return "prime";
    case PredicateKind::FieldPrimitive: return "field_primitive";
    case PredicateKind::FieldSquare: return "field_square";
    case PredicateKind::FieldNonsquare: return "field_nonsquare";
  }
  return "?";
}

PredicateKind predicate_kind_from_string(const std::string& name) {
  for (auto k : {PredicateKind::PrimeShift, PredicateKind::TwinIndex, PredicateKind::SophieGermainIndex,
                 PredicateKind::PrimitiveRootMod, PredicateKind::QuadraticResidueMod,
                 PredicateKind::QuadraticNonresidueMod, PredicateKind::CoprimeTo, PredicateKind::PrimePredicate,
                 PredicateKind::FieldPrimitive, PredicateKind::FieldSquare, PredicateKind::FieldNonsquare}) {
    if (to_string(k) == name) return k;
  }
  throw UsageError("unknown predicate kind '" + name + "'");
}

std::string PredicateSpec::describe() const {
  switch (kind) {
    case PredicateKind::PrimeShift:
      return std::to_string(a) + "k" + (b < 0 ? "" : "+") + std::to_string(b) + " prime";
    case PredicateKind::TwinIndex: return "6k-1, 6k+1 twin primes";
    case PredicateKind::SophieGermainIndex: return "6k-1, 12k-1 prime";
    case PredicateKind::PrimitiveRootMod: return "primitive root mod " + std::to_string(p);
    case PredicateKind::QuadraticResidueMod: return "quadratic residue mod " + std::to_string(p);
    case PredicateKind::QuadraticNonresidueMod: return "quadratic nonresidue mod " + std::to_string(p);
    case PredicateKind::CoprimeTo: return "coprime to " + std::to_string(p);
    case PredicateKind::PrimePredicate: return "prime";
    case PredicateKind::FieldPrimitive:
      return "primitive element of F_" + std::to_string(p) + "^" + std::to_string(degree);
    case PredicateKind::FieldSquare: return "square in F_" + std::to_string(p) + "^" + std::to_string(degree);
    case PredicateKind::FieldNonsquare:
      return "nonsquare in F_" + std::to_string(p) + "^" + std::to_string(degree);
  }
  return "?";
}

namespace {

bool prime_value(i128 v) {
  if (v < 0) throw DomainError("primality argument is negative");
  if (v > i128(std::numeric_limits<std::uint64_t>::max())) throw CapacityError("primality argument exceeds 64 bits");
  return is_prime(std::uint64_t(v));
}

std::uint64_t field_size(const PredicateSpec& spec) {
  u128 q = 1;
  for (std::int64_t i = 0; i < spec.degree; ++i) {
    q *= u128(spec.p);
    if (q > kMaxFieldSize) throw CapacityError("field predicate: q exceeds 2^20");
  }
  return std::uint64_t(q);
}

}  // namespace

bool eval_predicate(const PredicateSpec& spec, i128 k) {
  spec.validate();
  switch (spec.kind) {
    case PredicateKind::PrimeShift:
      return prime_value(i128(spec.a) * k + spec.b);
    case PredicateKind::TwinIndex:
      return prime_value(6 * k - 1) && prime_value(6 * k + 1);
    case PredicateKind::SophieGermainIndex:
      return prime_value(6 * k - 1) && prime_value(12 * k - 1);
    case PredicateKind::PrimitiveRootMod: {
      const auto n = std::uint64_t(spec.p);
      const auto r = std::uint64_t(mod_floor(k, i128(n)));
      if (std::gcd(r, n) != 1) throw DomainError("primitive-root argument not coprime to modulus");
      return is_primitive_root(r, n);
    }
    case PredicateKind::QuadraticResidueMod:
      return is_quadratic_residue(k, std::uint64_t(spec.p));
    case PredicateKind::QuadraticNonresidueMod:
      return !is_quadratic_residue(k, std::uint64_t(spec.p));
    case PredicateKind::CoprimeTo:
      return gcd128(k, spec.p) == 1;
    case PredicateKind::PrimePredicate:
      return prime_value(k);
    case PredicateKind::FieldPrimitive:
    case PredicateKind::FieldSquare:
    case PredicateKind::FieldNonsquare: {
      const std::uint64_t q = field_size(spec);
      if (k <= 0 || k >= i128(q)) throw DomainError("field predicate argument must encode a nonzero element");
      const FieldView field = field_make(std::uint64_t(spec.p), std::uint32_t(spec.degree));
      const auto x = std::uint32_t(k);
      if (spec.kind == PredicateKind::FieldPrimitive) return field.is_primitive(x);
      return field.is_square(x) == (spec.kind == PredicateKind::FieldSquare);
    }
  }
  return false;
}

PredicateTable::PredicateTable(PredicateSpec spec) : spec_(spec) {
  spec_.validate();
  switch (spec_.kind) {
    case PredicateKind::PrimitiveRootMod:
    case PredicateKind::QuadraticResidueMod:
    case PredicateKind::QuadraticNonresidueMod: {
      modulus_ = std::uint64_t(spec_.p);
      if (modulus_ > kMaxFieldSize) break;
      dense_.assign(modulus_, 0);
      for (std::uint64_t r = 1; r < modulus_; ++r) {
        if (std::gcd(r, modulus_) != 1) continue;
        dense_[r] = eval_predicate(spec_, i128(r)) ? 1 : 0;
      }
      break;
    }
    case PredicateKind::FieldPrimitive:
    case PredicateKind::FieldSquare:
    case PredicateKind::FieldNonsquare: {
      modulus_ = field_size(spec_);
      const FieldView field = field_make(std::uint64_t(spec_.p), std::uint32_t(spec_.degree));
      dense_.assign(modulus_, 0);
      for (std::uint32_t x = 1; x < modulus_; ++x) {
        if (spec_.kind == PredicateKind::FieldPrimitive)
          dense_[x] = field.is_primitive(x);
        else
          dense_[x] = field.is_square(x) == (spec_.kind == PredicateKind::FieldSquare);
      }
      break;
    }
    default:
      break;
  }
}

bool eval_predicate_lenient(const PredicateSpec& spec, i128 k) {
  try {
    return eval_predicate(spec, k);
  } catch (const DomainError&) {
    return false;
  }
}

bool PredicateTable::lenient(i128 k) const { return eval_predicate_lenient(spec_, k); }

bool PredicateTable::test(i128 k) const {
  if (!dense_.empty()) {
    if (spec_.kind == PredicateKind::FieldPrimitive || spec_.kind == PredicateKind::FieldSquare ||
        spec_.kind == PredicateKind::FieldNonsquare) {
      // Field arguments are element encodings, not integers to reduce.
      if (k < 0 || k >= i128(modulus_)) return false;
      return dense_[std::size_t(k)] != 0;
    }
    return dense_[std::size_t(mod_floor(k, i128(modulus_)))] != 0;
  }
  return lenient(k);
}

}  // namespace permlab::nt
