#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/check.hpp"
#include "permlab/constraint.hpp"

// Explicit permutation constructions. Each function returns the arrangement
// together with the constraint it satisfies, and re-runs check() on its own
// output before returning (PostconditionError on failure).

namespace permlab::cons {

struct Construction {
  Arrangement arrangement;
  Constraint constraint;
  /// Which case of the construction produced the output ("identity",
  /// "case3", "negated/case5-n9-eq", "g=2", ...).
  std::string branch;
};

/// Linear permutation starting at values[0] whose adjacent distances strictly
/// decrease. Input must be strictly monotone; a decreasing input is negated,
/// arranged and negated back.
Construction zigzag_distances(const std::vector<i128>& values);

/// Circular permutation of the first n primes, 2 first and p_n last, with
/// pairwise distinct distances. n = 2 is a DomainError: both edges of a
/// two-element circle join 2 and 3.
Construction prime_circle_distinct_distances(std::size_t n);

/// Circular permutation of 0..n with 0 first, n last and pairwise distinct
/// signed differences (n > 3).
Construction circular_distinct_diffs(std::int64_t n);

/// Permutation of 1..n with adjacent differences distinct mod n (n even).
Construction mod_distinct_diffs(std::int64_t n);

/// Circular numbering with all b_i + 2 b_{i+1} distinct. Elements of an
/// ordered group (integers or lex-ordered integer vectors), n > 3.
Construction weighted_sum_cycle(const GroupSpec& group, const std::vector<GroupElement>& values);

/// Circular numbering with all consecutive triple sums distinct, n > 3.
Construction triple_sum_cycle(const GroupSpec& group, const std::vector<GroupElement>& values);

/// a_i = g^i (i = 1..phi(n)) in Z/n for an odd prime power n, g the least
/// primitive root; elements and cyclic differences are reduced systems.
Construction reduced_residue_cycle(std::int64_t n);

enum class QrOperation { Sum, Difference };
enum class QrTarget { Squares, Nonsquares };

/// Circular arrangement g^2, g^4, ..., g^{q-1} of the nonzero squares of F_q
/// whose cyclic sums (or differences) are pairwise distinct and all lie in
/// the target class. g is the least primitive element (by encoding) with
/// 1 +- g^2 in the target class; nullopt when none exists. q odd prime power.
std::optional<Construction> qr_cycle(std::int64_t q, QrOperation op, QrTarget target);

std::string to_string(QrOperation op);
std::string to_string(QrTarget target);
QrOperation qr_operation_from_string(const std::string& name);
QrTarget qr_target_from_string(const std::string& name);

/// Circular permutation of 0..n (n odd, n >= 3), 0 first and n last, with all
/// adjacent sums coprime to n - 1 and n + 1.
Construction coprime_circle_odd(std::int64_t n);

/// Circular numbering of distinct integers with pairwise distinct adjacent
/// sums, obtained from the sorted order by at most one transposition.
Construction repair_adjacent_sums(const std::vector<i128>& values);

}  // namespace permlab::cons
