#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permlab/int128.hpp"

namespace permlab::nt {

/// Sieve of Eratosthenes over [0, limit].
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const { return n <= limit_ && table_[n]; }
  std::vector<std::uint64_t> primes() const;
  std::size_t count() const;

 private:
  std::uint64_t limit_;
  std::vector<bool> table_;
};

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic for every 64-bit input: strong-pseudoprime test to the first
// twelve prime bases, which has no composite survivors below 3.3 * 10^24.
bool is_prime(std::uint64_t n);

PrimeSieve primes_upto(std::uint64_t limit);

/// First `count` primes, in increasing order.
std::vector<std::uint64_t> first_primes(std::size_t count);

Factorization factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// True for n in {2, 4, p^k, 2p^k} with p an odd prime.
bool has_primitive_root(std::uint64_t n);

/// If n = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t n);

bool is_primitive_root(std::uint64_t g, std::uint64_t n);
std::uint64_t find_primitive_root(std::uint64_t n);

/// Euler's criterion; p must be an odd prime not dividing a.
bool is_quadratic_residue(i128 a, std::uint64_t p);

enum class PredicateKind {
  PrimeShift,            // a*k + b is prime
  TwinIndex,             // 6k-1 and 6k+1 both prime
  SophieGermainIndex,    // 6k-1 and 12k-1 both prime
  PrimitiveRootMod,      // k mod p generates (Z/p)^*
  QuadraticResidueMod,   // k mod p is a nonzero square
  QuadraticNonresidueMod,
  CoprimeTo,             // gcd(k, m) = 1
  PrimePredicate,        // k is prime
  FieldPrimitive,        // k encodes a primitive element of F_{p^e}
  FieldSquare,           // k encodes a nonzero square of F_{p^e}
  FieldNonsquare,
};

struct PredicateSpec {
  PredicateKind kind = PredicateKind::PrimePredicate;
  // PrimeShift: a, b. Modular kinds: p. CoprimeTo: m (stored in p).
  // Field kinds: p and degree.
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t p = 0;
  std::int64_t degree = 1;

  static PredicateSpec prime_shift(std::int64_t a, std::int64_t b);
  static PredicateSpec twin_index();
  static PredicateSpec sophie_germain_index();
  static PredicateSpec primitive_root_mod(std::int64_t p);
  static PredicateSpec quadratic_residue_mod(std::int64_t p);
  static PredicateSpec quadratic_nonresidue_mod(std::int64_t p);
  static PredicateSpec coprime_to(std::int64_t m);
  static PredicateSpec prime();
  static PredicateSpec field_primitive(std::int64_t p, std::int64_t degree);
  static PredicateSpec field_square(std::int64_t p, std::int64_t degree);
  static PredicateSpec field_nonsquare(std::int64_t p, std::int64_t degree);

  /// Throws UsageError when parameters violate the kind's requirements.
  void validate() const;
  bool is_modular() const;
  std::string describe() const;

  bool operator==(const PredicateSpec&) const = default;
};

std::string to_string(PredicateKind kind);
PredicateKind predicate_kind_from_string(const std::string& name);

/// Strict evaluation: out-of-range arguments (negative primality arguments,
/// k = 0 mod p for residue kinds) raise DomainError.
bool eval_predicate(const PredicateSpec& spec, i128 k);

/// Search-side semantics without tables: arguments the strict evaluator
/// rejects as belonging to neither class evaluate to false.
bool eval_predicate_lenient(const PredicateSpec& spec, i128 k);

/// Memoized evaluator used by search and checking. Arguments the strict
/// evaluator rejects as "neither class" evaluate to false here.
class PredicateTable {
 public:
  explicit PredicateTable(PredicateSpec spec);

  const PredicateSpec& spec() const { return spec_; }
  bool test(i128 k) const;

 private:
  bool lenient(i128 k) const;

  PredicateSpec spec_;
  // Indexed by the reduced argument; empty for the prime-valued kinds.
  std::vector<std::uint8_t> dense_;
  std::uint64_t modulus_ = 0;
};

}  // namespace permlab::nt
