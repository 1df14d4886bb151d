#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/constraint.hpp"

namespace permlab {

struct CheckReport {
  bool pass = true;
  std::optional<std::size_t> clause;  // index of the first violated clause
  std::vector<std::size_t> positions;  // offending positions (0-based)
  std::string message;
};

/// Independent certificate checker: recomputes every label directly from the
/// arrangement. Throws UsageError when elements do not belong to the group or
/// a clause does not apply to it.
CheckReport check(const Arrangement& arrangement, const Constraint& constraint);

/// As above, and also requires the arrangement to be a permutation of the
/// problem's ground set with the problem's shape.
CheckReport check(const Arrangement& arrangement, const Problem& problem);

}  // namespace permlab
