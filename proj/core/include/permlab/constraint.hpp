#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permlab/algebra.hpp"
#include "permlab/numtheory.hpp"

namespace permlab {

enum class Shape { Linear, Circular };

std::string to_string(Shape shape);
Shape shape_from_string(const std::string& name);

/// A linear or circular sequence of distinct group elements. A circular
/// arrangement of length L has the L edges (a_i, a_{i+1 mod L}); for L = 1
/// that is the single self-edge (a_1, a_1).
struct Arrangement {
  GroupSpec group;
  Shape shape = Shape::Linear;
  std::vector<GroupElement> elements;

  std::size_t size() const { return elements.size(); }
  /// Throws UsageError on invalid or repeated elements.
  void validate() const;
  bool operator==(const Arrangement& other) const = default;
};

Arrangement integer_arrangement(Shape shape, const std::vector<i128>& values);
/// Rank-1 coordinates of every element.
std::vector<i128> scalar_values(const Arrangement& arrangement);
std::string to_string(const Arrangement& arrangement);

enum class LabelerKind {
  Sum,                 // x + y
  Diff,                // x - y
  AbsDiffAndSum,       // both |x - y| and x + y
  SquarePlus,          // x^2 + y
  SquareMinus,         // x^2 - y
  ProductMinusOne,     // xy - 1
  TwoProductMinusOne,  // 2xy - 1
  TwoProductPlusOne,   // 2xy + 1
  AffineProduct,       // a0 + xy
  AbsSquareDiff,       // |x^2 - y^2|
};

struct Labeler {
  LabelerKind kind = LabelerKind::Sum;
  std::int64_t offset = 0;  // a0 for AffineProduct; a field encoding in finite fields

  bool reversal_symmetric() const;
  bool operator==(const Labeler&) const = default;
};

enum class ClauseKind {
  RainbowSum,       // x + y pairwise distinct
  RainbowDiff,      // x - y, directed
  RainbowDistance,  // |x - y|
  RainbowWeighted,  // x + 2y, directed
  RainbowTriple,    // x + y + z over consecutive triples
  RainbowProduct,   // xy
  EdgePredicate,
};

std::string to_string(ClauseKind kind);
ClauseKind clause_kind_from_string(const std::string& name);
std::string to_string(LabelerKind kind);
LabelerKind labeler_kind_from_string(const std::string& name);

struct Clause {
  ClauseKind kind = ClauseKind::RainbowSum;
  // Rainbow clauses over Integers may compare labels modulo this value (0 = exact).
  std::int64_t modulus = 0;
  nt::PredicateSpec predicate;
  Labeler labeler;

  static Clause rainbow(ClauseKind kind, std::int64_t modulus = 0);
  static Clause edge(nt::PredicateSpec predicate, Labeler labeler);
  static Clause edge(nt::PredicateSpec predicate, LabelerKind labeler) { return edge(predicate, Labeler{labeler, 0}); }

  bool is_rainbow() const { return kind != ClauseKind::EdgePredicate; }
  bool reversal_symmetric() const;
  std::string describe() const;
  bool operator==(const Clause&) const = default;
};

struct Pins {
  std::optional<GroupElement> first;
  std::optional<GroupElement> last;
  bool empty() const { return !first && !last; }
  bool operator==(const Pins&) const = default;
};

struct Constraint {
  std::vector<Clause> clauses;
  Pins pins;

  /// Reflection reduction is allowed only when every clause is invariant
  /// under reversing the traversal direction.
  bool reversal_symmetric() const;
  /// Checks clause/group compatibility; throws UsageError.
  void validate(const GroupSpec& group) const;
  bool operator==(const Constraint&) const = default;
};

/// A search instance: arrange every element of `ground` subject to `constraint`.
struct Problem {
  GroupSpec group;
  std::vector<GroupElement> ground;
  Shape shape = Shape::Circular;
  Constraint constraint;

  void validate() const;
};

/// Ground set {lo, ..., hi} in the integers.
std::vector<GroupElement> integer_range(i128 lo, i128 hi);
std::vector<GroupElement> integer_set(const std::vector<i128>& values);

}  // namespace permlab
