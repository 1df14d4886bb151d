#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permlab/check.hpp"
#include "permlab/constraint.hpp"

namespace permlab {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class SearchStatus { Witness, Exhausted, BudgetExceeded };
std::string to_string(SearchStatus status);

struct SearchOptions {
  /// Node limit; a node is one attempted placement, failed or not.
  std::uint64_t budget = kDefaultBudget;
  /// Keep going after the first witness and count all canonical witnesses.
  bool enumerate_all = false;
  /// With enumerate_all, how many witnesses to retain.
  std::size_t keep = 1000;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Arrangement> witness;
  std::uint64_t nodes = 0;
  std::uint64_t elapsed_ms = 0;
  std::uint64_t witness_count = 0;
  std::vector<Arrangement> witnesses;
};

/// Exact backtracking search. Candidates are tried in ascending element
/// order; circular searches without pins fix the least element at position 0
/// and, when the constraint is reversal-symmetric, require the second element
/// to be smaller than the last. Every returned witness has passed check().
SearchOutcome search(const Problem& problem, const SearchOptions& options = {});

/// Rotation (and, for reversal-symmetric constraints, reflection) normal form
/// of a circular arrangement; linear arrangements and arrangements under a
/// pinned constraint are returned unchanged.
Arrangement canonical_form(const Arrangement& arrangement, const Constraint& constraint);

inline constexpr std::size_t kBruteForceLimit = 9;

struct BruteForceResult {
  std::uint64_t canonical_count = 0;  // distinct canonical satisfiers
  std::uint64_t raw_count = 0;        // satisfying permutations before dedup
  std::vector<Arrangement> witnesses;  // canonical, filled when count <= 1000
};

/// Naive oracle: every permutation, checked with check(), deduplicated by
/// canonical_form. CapacityError above kBruteForceLimit elements.
BruteForceResult brute_force_enumerate(const Problem& problem);

// Two numberings a, b of one set with all a_i + 2 b_i distinct. Only the
// pairing i -> (a_i, b_i) matters, so the search runs over bijections.

inline constexpr std::size_t kPairingLimit = 6;

struct PairingOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  std::uint64_t nodes = 0;
  std::uint64_t elapsed_ms = 0;
};

PairingOutcome search_pairing(const GroupSpec& group, const std::vector<GroupElement>& ground,
                              std::uint64_t budget = kDefaultBudget);
/// True iff the pairs use every ground element once on each side and all
/// a + 2b are distinct.
bool check_pairing(const GroupSpec& group, const std::vector<GroupElement>& ground,
                   const std::vector<std::pair<GroupElement, GroupElement>>& pairs);
/// Number of bijections satisfying the pairing condition (n <= kPairingLimit).
std::uint64_t brute_force_pairings(const GroupSpec& group, const std::vector<GroupElement>& ground);

}  // namespace permlab
