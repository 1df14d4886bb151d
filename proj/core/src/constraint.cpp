#include "permlab/constraint.hpp"

#include <algorithm>
#include <set>

#include "permlab/errors.hpp"

namespace permlab {

std::string to_string(Shape shape) { return shape == Shape::Linear ? "linear" : "circular"; }

Shape shape_from_string(const std::string& name) {
  if (name == "linear") return Shape::Linear;
  if (name == "circular") return Shape::Circular;
  throw UsageError("shape must be 'linear' or 'circular', got '" + name + "'");
}

void Arrangement::validate() const {
  if (elements.empty()) throw UsageError("arrangement is empty");
  std::set<GroupElement> seen;
  for (const auto& x : elements) {
    validate_element(group, x);
    if (!seen.insert(x).second) throw UsageError("arrangement repeats element " + to_string(x));
  }
}

Arrangement integer_arrangement(Shape shape, const std::vector<i128>& values) {
  Arrangement a{GroupSpec::integers(), shape, {}};
  for (i128 v : values) a.elements.push_back(GroupElement::scalar(v));
  return a;
}

std::vector<i128> scalar_values(const Arrangement& arrangement) {
  std::vector<i128> out;
  for (const auto& x : arrangement.elements) {
    if (x.coords.size() != 1) throw UsageError("scalar_values: element " + to_string(x) + " is not rank 1");
    out.push_back(x.coords[0]);
  }
  return out;
}

std::string to_string(const Arrangement& arrangement) {
  std::string out = "(";
  for (std::size_t i = 0; i < arrangement.elements.size(); ++i) {
    if (i) out += ",";
    out += to_string(arrangement.elements[i]);
  }
  return out + ")";
}

bool Labeler::reversal_symmetric() const {
  switch (kind) {
    case LabelerKind::Diff:
    case LabelerKind::SquarePlus:
    case LabelerKind::SquareMinus:
      return false;
    default:
      return true;
  }
}

namespace {

constexpr std::pair<ClauseKind, const char*> kClauseNames[] = {
    {ClauseKind::RainbowSum, "rainbow_sum"},       {ClauseKind::RainbowDiff, "rainbow_diff"},
    {ClauseKind::RainbowDistance, "rainbow_distance"}, {ClauseKind::RainbowWeighted, "rainbow_weighted"},
    {ClauseKind::RainbowTriple, "rainbow_triple"}, {ClauseKind::RainbowProduct, "rainbow_product"},
    {ClauseKind::EdgePredicate, "edge_predicate"},
};

constexpr std::pair<LabelerKind, const char*> kLabelerNames[] = {
    {LabelerKind::Sum, "sum"},
    {LabelerKind::Diff, "diff"},
    {LabelerKind::AbsDiffAndSum, "abs_diff_and_sum"},
    {LabelerKind::SquarePlus, "square_plus"},
    {LabelerKind::SquareMinus, "square_minus"},
    {LabelerKind::ProductMinusOne, "product_minus_one"},
    {LabelerKind::TwoProductMinusOne, "two_product_minus_one"},
    {LabelerKind::TwoProductPlusOne, "two_product_plus_one"},
    {LabelerKind::AffineProduct, "affine_product"},
    {LabelerKind::AbsSquareDiff, "abs_square_diff"},
};

}  // namespace

std::string to_string(ClauseKind kind) {
  for (const auto& [k, name] : kClauseNames)
    if (k == kind) return name;
  return "?";
}

ClauseKind clause_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kClauseNames)
    if (name == n) return k;
  throw UsageError("unknown clause kind '" + name + "'");
}

std::string to_string(LabelerKind kind) {
  for (const auto& [k, name] : kLabelerNames)
    if (k == kind) return name;
  return "?";
}

LabelerKind labeler_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kLabelerNames)
    if (name == n) return k;
  throw UsageError("unknown labeler '" + name + "'");
}

Clause Clause::rainbow(ClauseKind kind, std::int64_t modulus) {
  if (kind == ClauseKind::EdgePredicate) throw UsageError("Clause::rainbow needs a rainbow kind");
  Clause c;
  c.kind = kind;
  c.modulus = modulus;
  return c;
}

Clause Clause::edge(nt::PredicateSpec predicate, Labeler labeler) {
  Clause c;
  c.kind = ClauseKind::EdgePredicate;
  c.predicate = predicate;
  c.labeler = labeler;
  return c;
}

bool Clause::reversal_symmetric() const {
  switch (kind) {
    case ClauseKind::RainbowSum:
    case ClauseKind::RainbowDistance:
    case ClauseKind::RainbowProduct:
    case ClauseKind::RainbowTriple:
      return true;
    case ClauseKind::RainbowDiff:
    case ClauseKind::RainbowWeighted:
      return false;
    case ClauseKind::EdgePredicate:
      return labeler.reversal_symmetric();
  }
  return false;
}

std::string Clause::describe() const {
  if (kind != ClauseKind::EdgePredicate) {
    std::string out = to_string(kind);
    if (modulus != 0) out += " mod " + std::to_string(modulus);
    return out;
  }
  std::string out = "edge_predicate(" + predicate.describe() + ", " + to_string(labeler.kind);
  if (labeler.kind == LabelerKind::AffineProduct) out += " a0=" + std::to_string(labeler.offset);
  return out + ")";
}

bool Constraint::reversal_symmetric() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.reversal_symmetric(); });
}

void Constraint::validate(const GroupSpec& group) const {
  if (clauses.empty()) throw UsageError("constraint has no clauses");
  for (const auto& c : clauses) {
    if (c.modulus < 0) throw UsageError("clause modulus must be nonnegative");
    if (c.modulus != 0 && group.kind() != GroupKind::Integers)
      throw UsageError("label moduli apply to integer groups only");
    switch (c.kind) {
      case ClauseKind::RainbowDistance:
        if (!group.is_ordered()) throw UsageError("rainbow_distance needs an ordered group");
        break;
      case ClauseKind::RainbowProduct:
        if (!group.has_multiplication()) throw UsageError("rainbow_product needs a ring");
        break;
      case ClauseKind::EdgePredicate: {
        c.predicate.validate();
        if (group.kind() == GroupKind::IntegerVectors && group.rank() > 1)
          throw UsageError("edge predicates need integer-valued labels");
        const auto k = c.labeler.kind;
        const bool needs_order = k == LabelerKind::AbsDiffAndSum || k == LabelerKind::AbsSquareDiff;
        const bool needs_ring = k != LabelerKind::Sum && k != LabelerKind::Diff && k != LabelerKind::AbsDiffAndSum;
        if (needs_order && !group.is_ordered()) throw UsageError(to_string(k) + " needs an ordered group");
        if (needs_ring && !group.has_multiplication()) throw UsageError(to_string(k) + " needs a ring");
        break;
      }
      default:
        break;
    }
  }
  if (pins.first) validate_element(group, *pins.first);
  if (pins.last) validate_element(group, *pins.last);
}

void Problem::validate() const {
  if (ground.empty()) throw UsageError("ground set is empty");
  Arrangement{group, shape, ground}.validate();
  constraint.validate(group);
  auto present = [&](const GroupElement& x) { return std::find(ground.begin(), ground.end(), x) != ground.end(); };
  if (constraint.pins.first && !present(*constraint.pins.first))
    throw UsageError("pinned first element is not in the ground set");
  if (constraint.pins.last && !present(*constraint.pins.last))
    throw UsageError("pinned last element is not in the ground set");
  if (constraint.pins.first && constraint.pins.last && *constraint.pins.first == *constraint.pins.last &&
      ground.size() > 1)
    throw UsageError("first and last pins coincide");
}

std::vector<GroupElement> integer_range(i128 lo, i128 hi) {
  std::vector<GroupElement> out;
  for (i128 v = lo; v <= hi; ++v) out.push_back(GroupElement::scalar(v));
  return out;
}

std::vector<GroupElement> integer_set(const std::vector<i128>& values) {
  std::vector<GroupElement> out;
  for (i128 v : values) out.push_back(GroupElement::scalar(v));
  return out;
}

}  // namespace permlab
