#include "permlab/check.hpp"

#include <algorithm>
#include <map>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

// Ring constant c: the integer itself, or c times the field's one.
GroupElement ring_constant(const GroupSpec& g, i128 c) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return GroupElement::scalar(c);
    case GroupKind::PrimeField:
      return GroupElement::scalar(mod_floor(c, g.characteristic()));
    case GroupKind::PrimePowerField: {
      GroupElement one = group_zero(g);
      one.coords.back() = mod_floor(c, g.characteristic());
      return one;
    }
    default:
      throw UsageError("no ring constants in " + g.describe());
  }
}

GroupElement rainbow_label(const GroupSpec& g, const Clause& clause, const GroupElement& x, const GroupElement& y) {
  GroupElement label;
  switch (clause.kind) {
    case ClauseKind::RainbowSum:
      label = group_add(g, x, y);
      break;
    case ClauseKind::RainbowDiff:
      label = group_sub(g, x, y);
      break;
    case ClauseKind::RainbowDistance:
      label = group_abs(g, group_sub(g, x, y));
      break;
    case ClauseKind::RainbowWeighted:
      label = group_add(g, x, group_add(g, y, y));
      break;
    case ClauseKind::RainbowProduct:
      label = group_mul(g, x, y);
      break;
    default:
      throw UsageError("rainbow_label: not a pair clause");
  }
  if (clause.modulus != 0) label.coords[0] = mod_floor(label.coords[0], clause.modulus);
  return label;
}

std::vector<i128> predicate_arguments(const GroupSpec& g, const Labeler& labeler, const GroupElement& x,
                                      const GroupElement& y) {
  auto enc = [&](const GroupElement& e) { return encode_element(g, e); };
  auto sq = [&](const GroupElement& e) { return group_mul(g, e, e); };
  switch (labeler.kind) {
    case LabelerKind::Sum:
      return {enc(group_add(g, x, y))};
    case LabelerKind::Diff:
      return {enc(group_sub(g, x, y))};
    case LabelerKind::AbsDiffAndSum:
      return {enc(group_abs(g, group_sub(g, x, y))), enc(group_add(g, x, y))};
    case LabelerKind::SquarePlus:
      return {enc(group_add(g, sq(x), y))};
    case LabelerKind::SquareMinus:
      return {enc(group_sub(g, sq(x), y))};
    case LabelerKind::ProductMinusOne:
      return {enc(group_sub(g, group_mul(g, x, y), ring_constant(g, 1)))};
    case LabelerKind::TwoProductMinusOne:
      return {enc(group_sub(g, group_scale(g, group_mul(g, x, y), 2), ring_constant(g, 1)))};
    case LabelerKind::TwoProductPlusOne:
      return {enc(group_add(g, group_scale(g, group_mul(g, x, y), 2), ring_constant(g, 1)))};
    case LabelerKind::AffineProduct: {
      const GroupElement a0 =
          g.kind() == GroupKind::Integers ? GroupElement::scalar(labeler.offset) : decode_element(g, labeler.offset);
      return {enc(group_add(g, a0, group_mul(g, x, y)))};
    }
    case LabelerKind::AbsSquareDiff:
      return {enc(group_abs(g, group_sub(g, sq(x), sq(y))))};
  }
  return {};
}

std::string positions_text(const std::vector<std::size_t>& positions) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) out += (i ? "," : "") + std::to_string(positions[i]);
  return out;
}

}  // namespace

CheckReport check(const Arrangement& arrangement, const Constraint& constraint) {
  arrangement.validate();
  constraint.validate(arrangement.group);
  const GroupSpec& g = arrangement.group;
  const auto& a = arrangement.elements;
  const std::size_t n = a.size();
  const bool circular = arrangement.shape == Shape::Circular;

  CheckReport report;
  auto fail = [&](std::optional<std::size_t> clause, std::vector<std::size_t> positions, std::string message) {
    report.pass = false;
    report.clause = clause;
    report.positions = std::move(positions);
    report.message = std::move(message);
    return report;
  };

  if (constraint.pins.first && a.front() != *constraint.pins.first)
    return fail(std::nullopt, {0}, "first element is " + to_string(a.front()) + ", pinned " +
                                       to_string(*constraint.pins.first));
  if (constraint.pins.last && a.back() != *constraint.pins.last)
    return fail(std::nullopt, {n - 1}, "last element is " + to_string(a.back()) + ", pinned " +
                                           to_string(*constraint.pins.last));

  const std::size_t edge_count = circular ? n : n - 1;
  for (std::size_t ci = 0; ci < constraint.clauses.size(); ++ci) {
    const Clause& clause = constraint.clauses[ci];
    if (clause.kind == ClauseKind::EdgePredicate) {
      for (std::size_t i = 0; i < edge_count; ++i) {
        const std::size_t j = (i + 1) % n;
        for (i128 value : predicate_arguments(g, clause.labeler, a[i], a[j])) {
          if (!nt::eval_predicate_lenient(clause.predicate, value))
            return fail(ci, {i, j},
                        clause.describe() + " fails on edge (" + to_string(a[i]) + ", " + to_string(a[j]) +
                            ") with value " + to_string(value));
        }
      }
      continue;
    }
    // Rainbow clause: map each label to the position that first produced it.
    std::map<GroupElement, std::size_t> first_seen;
    if (clause.kind == ClauseKind::RainbowTriple) {
      const std::size_t triples = circular ? (n >= 3 ? n : 0) : (n >= 3 ? n - 2 : 0);
      for (std::size_t i = 0; i < triples; ++i) {
        GroupElement s = group_add(g, group_add(g, a[i], a[(i + 1) % n]), a[(i + 2) % n]);
        if (clause.modulus != 0) s.coords[0] = mod_floor(s.coords[0], clause.modulus);
        auto [it, fresh] = first_seen.emplace(s, i);
        if (!fresh)
          return fail(ci, {it->second, i},
                      clause.describe() + ": triples at positions " + std::to_string(it->second) + " and " +
                          std::to_string(i) + " both sum to " + to_string(s));
      }
      continue;
    }
    for (std::size_t i = 0; i < edge_count; ++i) {
      const GroupElement label = rainbow_label(g, clause, a[i], a[(i + 1) % n]);
      auto [it, fresh] = first_seen.emplace(label, i);
      if (!fresh)
        return fail(ci, {it->second, i},
                    clause.describe() + ": edges at positions " + std::to_string(it->second) + " and " +
                        std::to_string(i) + " share label " + to_string(label));
    }
  }
  return report;
}

CheckReport check(const Arrangement& arrangement, const Problem& problem) {
  if (!(arrangement.group == problem.group)) throw UsageError("arrangement group differs from the problem's");
  CheckReport report;
  if (arrangement.shape != problem.shape) {
    report.pass = false;
    report.message = "arrangement is " + to_string(arrangement.shape) + ", problem is " + to_string(problem.shape);
    return report;
  }
  auto sorted_arr = arrangement.elements;
  auto sorted_ground = problem.ground;
  std::sort(sorted_arr.begin(), sorted_arr.end());
  std::sort(sorted_ground.begin(), sorted_ground.end());
  if (sorted_arr != sorted_ground) {
    report.pass = false;
    report.message = "arrangement is not a permutation of the ground set";
    return report;
  }
  report = check(arrangement, problem.constraint);
  if (!report.pass && !report.positions.empty()) report.message += " [positions " + positions_text(report.positions) + "]";
  return report;
}

}  // namespace permlab
