#include "permlab/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "permlab/errors.hpp"

namespace permlab {

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Witness: return "witness";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t millis_since(Clock::time_point start) {
  return std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

// Assigns dense ids to labels. Encodable groups key on the integer
// encoding; integer vectors fall back to an ordered map.
class LabelInterner {
 public:
  explicit LabelInterner(const GroupSpec& g) : group_(g), encodable_(g.width() == 1 || g.is_finite()) {}

  std::uint32_t id(const GroupElement& label) {
    if (encodable_) {
      const i128 key = encode_element(group_, label);
      auto [it, fresh] = by_code_.emplace(key, next_);
      if (fresh) ++next_;
      return it->second;
    }
    auto [it, fresh] = by_element_.emplace(label, next_);
    if (fresh) ++next_;
    return it->second;
  }
  std::uint32_t size() const { return next_; }

 private:
  struct Hash {
    std::size_t operator()(i128 v) const {
      const auto lo = std::uint64_t(v), hi = std::uint64_t(u128(v) >> 64);
      return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
  };
  const GroupSpec& group_;
  bool encodable_;
  std::unordered_map<i128, std::uint32_t, Hash> by_code_;
  std::map<GroupElement, std::uint32_t> by_element_;
  std::uint32_t next_ = 0;
};

GroupElement field_one(const GroupSpec& g, i128 c) {
  switch (g.kind()) {
    case GroupKind::Integers:
      return GroupElement::scalar(c);
    case GroupKind::PrimeField:
      return GroupElement::scalar(mod_floor(c, g.characteristic()));
    case GroupKind::PrimePowerField: {
      GroupElement e = group_zero(g);
      e.coords.back() = mod_floor(c, g.characteristic());
      return e;
    }
    default:
      throw UsageError("no ring constants in " + g.describe());
  }
}

// Edge values handed to the predicate for the directed edge x -> y.
void edge_values(const GroupSpec& g, const Labeler& lab, const GroupElement& x, const GroupElement& y,
                 std::vector<i128>& out) {
  out.clear();
  auto enc = [&](const GroupElement& e) { out.push_back(encode_element(g, e)); };
  switch (lab.kind) {
    case LabelerKind::Sum: enc(group_add(g, x, y)); break;
    case LabelerKind::Diff: enc(group_sub(g, x, y)); break;
    case LabelerKind::AbsDiffAndSum:
      enc(group_abs(g, group_sub(g, x, y)));
      enc(group_add(g, x, y));
      break;
    case LabelerKind::SquarePlus: enc(group_add(g, group_mul(g, x, x), y)); break;
    case LabelerKind::SquareMinus: enc(group_sub(g, group_mul(g, x, x), y)); break;
    case LabelerKind::ProductMinusOne: enc(group_sub(g, group_mul(g, x, y), field_one(g, 1))); break;
    case LabelerKind::TwoProductMinusOne:
      enc(group_sub(g, group_scale(g, group_mul(g, x, y), 2), field_one(g, 1)));
      break;
    case LabelerKind::TwoProductPlusOne:
      enc(group_add(g, group_scale(g, group_mul(g, x, y), 2), field_one(g, 1)));
      break;
    case LabelerKind::AffineProduct: {
      const GroupElement a0 =
          g.kind() == GroupKind::Integers ? GroupElement::scalar(lab.offset) : decode_element(g, lab.offset);
      enc(group_add(g, a0, group_mul(g, x, y)));
      break;
    }
    case LabelerKind::AbsSquareDiff:
      enc(group_abs(g, group_sub(g, group_mul(g, x, x), group_mul(g, y, y))));
      break;
  }
}

GroupElement pair_label(const GroupSpec& g, ClauseKind kind, const GroupElement& x, const GroupElement& y) {
  switch (kind) {
    case ClauseKind::RainbowSum: return group_add(g, x, y);
    case ClauseKind::RainbowDiff: return group_sub(g, x, y);
    case ClauseKind::RainbowDistance: return group_abs(g, group_sub(g, x, y));
    case ClauseKind::RainbowWeighted: return group_add(g, x, group_scale(g, y, 2));
    case ClauseKind::RainbowProduct: return group_mul(g, x, y);
    default: throw std::logic_error("pair_label: not a pair clause");
  }
}

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t words() const { return w_.size(); }
  std::uint64_t word(std::size_t k) const { return w_[k]; }
  std::uint64_t& word(std::size_t k) { return w_[k]; }

 private:
  std::vector<std::uint64_t> w_;
};

struct CompiledInstance {
  std::size_t n = 0;
  std::vector<GroupElement> elements;  // ascending
  // One N*N id table per pair clause, one N^3 table per triple clause.
  std::vector<std::vector<std::uint32_t>> pair_ids;
  std::vector<std::uint32_t> pair_label_count;
  std::vector<std::vector<std::uint32_t>> triple_ids;
  std::vector<std::uint32_t> triple_label_count;
  bool has_predicates = false;
  std::vector<Bits> out;  // out[u] has v iff edge u -> v passes every predicate
  std::vector<Bits> in;
  int pin_first = -1;
  int pin_last = -1;
};

constexpr std::size_t kTripleTableLimit = 64;

CompiledInstance compile(const Problem& problem) {
  CompiledInstance ci;
  ci.elements = problem.ground;
  std::sort(ci.elements.begin(), ci.elements.end());
  ci.n = ci.elements.size();
  const std::size_t n = ci.n;
  const GroupSpec& g = problem.group;
  auto index_of = [&](const GroupElement& x) {
    return int(std::lower_bound(ci.elements.begin(), ci.elements.end(), x) - ci.elements.begin());
  };
  if (problem.constraint.pins.first) ci.pin_first = index_of(*problem.constraint.pins.first);
  if (problem.constraint.pins.last) ci.pin_last = index_of(*problem.constraint.pins.last);

  ci.out.assign(n, Bits(n));
  ci.in.assign(n, Bits(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      ci.out[u].set(v);
      ci.in[v].set(u);
    }

  std::vector<i128> values;
  for (const Clause& clause : problem.constraint.clauses) {
    if (clause.kind == ClauseKind::EdgePredicate) {
      ci.has_predicates = true;
      const nt::PredicateTable table(clause.predicate);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          if (!ci.out[u].test(v)) continue;
          edge_values(g, clause.labeler, ci.elements[u], ci.elements[v], values);
          const bool ok = std::all_of(values.begin(), values.end(), [&](i128 k) { return table.test(k); });
          if (!ok) {
            ci.out[u].reset(v);
            ci.in[v].reset(u);
          }
        }
    } else if (clause.kind == ClauseKind::RainbowTriple) {
      if (n > kTripleTableLimit) throw CapacityError("rainbow_triple search supports at most 64 elements");
      LabelInterner interner(g);
      std::vector<std::uint32_t> ids(n * n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const GroupElement ab = group_add(g, ci.elements[a], ci.elements[b]);
          for (std::size_t c = 0; c < n; ++c) {
            GroupElement s = group_add(g, ab, ci.elements[c]);
            if (clause.modulus != 0) s.coords[0] = mod_floor(s.coords[0], clause.modulus);
            ids[(a * n + b) * n + c] = interner.id(s);
          }
        }
      ci.triple_ids.push_back(std::move(ids));
      ci.triple_label_count.push_back(interner.size());
    } else {
      LabelInterner interner(g);
      std::vector<std::uint32_t> ids(n * n);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          GroupElement label = pair_label(g, clause.kind, ci.elements[u], ci.elements[v]);
          if (clause.modulus != 0) label.coords[0] = mod_floor(label.coords[0], clause.modulus);
          ids[u * n + v] = interner.id(label);
        }
      ci.pair_ids.push_back(std::move(ids));
      ci.pair_label_count.push_back(interner.size());
    }
  }
  return ci;
}

class Kernel {
 public:
  Kernel(const Problem& problem, const CompiledInstance& ci, const SearchOptions& options)
      : problem_(problem),
        ci_(ci),
        options_(options),
        n_(ci.n),
        circular_(problem.shape == Shape::Circular),
        pinned_(ci.pin_first >= 0 || ci.pin_last >= 0),
        reflect_(circular_ && !pinned_ && problem.constraint.reversal_symmetric() && ci.n >= 3),
        path_(ci.n),
        unused_(ci.n) {
    for (std::size_t i = 0; i < n_; ++i) unused_.set(i);
    for (auto c : ci.pair_label_count) pair_used_.emplace_back(c, 0);
    for (auto c : ci.triple_label_count) triple_used_.emplace_back(c, 0);
  }

  void run() {
    if (circular_ && !pinned_) {
      // Rotation reduction: the least element sits at position 0.
      try_first(0);
    } else if (ci_.pin_first >= 0) {
      try_first(std::size_t(ci_.pin_first));
    } else {
      for (std::size_t v = 0; v < n_ && !stop_; ++v) {
        if (n_ > 1 && int(v) == ci_.pin_last) continue;
        try_first(v);
      }
    }
  }

  bool budget_hit() const { return budget_hit_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t found() const { return found_; }
  std::vector<Arrangement>& witnesses() { return witnesses_; }

 private:
  bool count_node() {
    if (++nodes_ > options_.budget) {
      budget_hit_ = true;
      stop_ = true;
      return false;
    }
    return true;
  }

  void try_first(std::size_t v) {
    if (!count_node()) return;
    path_[0] = v;
    unused_.reset(v);
    if (n_ == 1) {
      if (!circular_ || closing_ok(0)) record();
    } else {
      extend(1);
    }
    unused_.set(v);
  }

  std::uint32_t pair_id(std::size_t c, std::size_t u, std::size_t v) const { return ci_.pair_ids[c][u * n_ + v]; }
  std::uint32_t triple_id(std::size_t c, std::size_t a, std::size_t b, std::size_t d) const {
    return ci_.triple_ids[c][(a * n_ + b) * n_ + d];
  }

  // Labels added when placing v at position pos (excluding wrap-around).
  bool place(std::size_t pos, std::size_t v) {
    const std::size_t u = path_[pos - 1];
    if (ci_.has_predicates && !ci_.out[u].test(v)) return false;
    for (std::size_t c = 0; c < pair_used_.size(); ++c)
      if (pair_used_[c][pair_id(c, u, v)]) return false;
    if (pos >= 2)
      for (std::size_t c = 0; c < triple_used_.size(); ++c)
        if (triple_used_[c][triple_id(c, path_[pos - 2], u, v)]) return false;
    for (std::size_t c = 0; c < pair_used_.size(); ++c) ++pair_used_[c][pair_id(c, u, v)];
    if (pos >= 2)
      for (std::size_t c = 0; c < triple_used_.size(); ++c) ++triple_used_[c][triple_id(c, path_[pos - 2], u, v)];
    return true;
  }

  void unplace(std::size_t pos, std::size_t v) {
    const std::size_t u = path_[pos - 1];
    for (std::size_t c = 0; c < pair_used_.size(); ++c) --pair_used_[c][pair_id(c, u, v)];
    if (pos >= 2)
      for (std::size_t c = 0; c < triple_used_.size(); ++c) --triple_used_[c][triple_id(c, path_[pos - 2], u, v)];
  }

  // Wrap-around edge and triples once every position is filled.
  bool closing_ok(std::size_t last) {
    const std::size_t v = path_[last];
    const std::size_t first = path_[0];
    if (ci_.has_predicates && !ci_.out[v].test(first)) return false;
    bool ok = true;
    std::vector<std::pair<std::size_t, std::uint32_t>> added;
    for (std::size_t c = 0; c < pair_used_.size() && ok; ++c) {
      const auto id = pair_id(c, v, first);
      if (pair_used_[c][id]) ok = false;
      else {
        ++pair_used_[c][id];
        added.emplace_back(c, id);
      }
    }
    for (auto [c, id] : added) --pair_used_[c][id];
    if (!ok) return false;
    if (n_ >= 3 && !triple_used_.empty()) {
      for (std::size_t c = 0; c < triple_used_.size(); ++c) {
        const auto t1 = triple_id(c, path_[last - 1], v, first);
        const auto t2 = triple_id(c, v, first, path_[1]);
        if (triple_used_[c][t1] || triple_used_[c][t2] || t1 == t2) return false;
      }
    }
    return true;
  }

  // An unplaced vertex needs a predecessor and a successor among the
  // vertices still able to neighbour it.
  bool feasible(std::size_t pos) const {
    if (!ci_.has_predicates) return true;
    const std::size_t tail = path_[pos];
    const std::size_t head = path_[0];
    const std::size_t words = unused_.words();
    bool any_unused = false;
    for (std::size_t k = 0; k < words; ++k) any_unused |= unused_.word(k) != 0;
    if (!any_unused) return true;
    if (circular_) {
      bool head_has_pred = false;
      for (std::size_t k = 0; k < words; ++k) head_has_pred |= (ci_.in[head].word(k) & unused_.word(k)) != 0;
      if (!head_has_pred) return false;
    }
    int dead_ends = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!unused_.test(v)) continue;
      std::size_t in_count = 0, out_count = 0, both = 0;
      std::size_t in_only = 0, out_only = 0;
      for (std::size_t k = 0; k < words; ++k) {
        std::uint64_t pool = unused_.word(k);
        if ((v >> 6) == k) pool &= ~(std::uint64_t{1} << (v & 63));
        std::uint64_t in_pool = pool, out_pool = pool;
        if ((tail >> 6) == k) in_pool |= std::uint64_t{1} << (tail & 63);
        if (circular_ && (head >> 6) == k) out_pool |= std::uint64_t{1} << (head & 63);
        const std::uint64_t a = ci_.in[v].word(k) & in_pool;
        const std::uint64_t b = ci_.out[v].word(k) & out_pool;
        in_count += std::popcount(a);
        out_count += std::popcount(b);
        both += std::popcount(a & b);
        in_only = a ? k * 64 + std::countr_zero(a) : in_only;
        out_only = b ? k * 64 + std::countr_zero(b) : out_only;
      }
      if (in_count == 0) return false;
      if (circular_) {
        if (out_count == 0) return false;
        if (in_count == 1 && out_count == 1 && both == 1 && in_only == out_only) return false;
      } else if (out_count == 0 && int(v) != ci_.pin_last && ++dead_ends > 1) {
        return false;
      }
    }
    return true;
  }

  void extend(std::size_t pos) {
    const bool last = pos == n_ - 1;
    for (std::size_t v = 0; v < n_ && !stop_; ++v) {
      if (!unused_.test(v)) continue;
      if (ci_.pin_last >= 0 && (int(v) == ci_.pin_last) != last) continue;
      if (last && reflect_ && v < path_[1]) continue;
      if (!count_node()) return;
      if (!place(pos, v)) continue;
      path_[pos] = v;
      unused_.reset(v);
      if (last) {
        if (!circular_ || closing_ok(pos)) record();
      } else if (feasible(pos)) {
        extend(pos + 1);
      }
      unused_.set(v);
      unplace(pos, v);
    }
  }

  void record() {
    Arrangement a{problem_.group, problem_.shape, {}};
    a.elements.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) a.elements.push_back(ci_.elements[path_[i]]);
    const CheckReport report = check(a, problem_);
    if (!report.pass) throw std::logic_error("search produced a witness rejected by the checker: " + report.message);
    ++found_;
    if (witnesses_.size() < std::max<std::size_t>(options_.keep, 1)) witnesses_.push_back(std::move(a));
    if (!options_.enumerate_all) stop_ = true;
  }

  const Problem& problem_;
  const CompiledInstance& ci_;
  const SearchOptions& options_;
  std::size_t n_;
  bool circular_;
  bool pinned_;
  bool reflect_;
  std::vector<std::size_t> path_;
  Bits unused_;
  std::vector<std::vector<std::uint32_t>> pair_used_;
  std::vector<std::vector<std::uint32_t>> triple_used_;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_ = 0;
  bool stop_ = false;
  bool budget_hit_ = false;
  std::vector<Arrangement> witnesses_;
};

}  // namespace

SearchOutcome search(const Problem& problem, const SearchOptions& options) {
  problem.validate();
  if (options.budget < 1) throw UsageError("search budget must be at least 1 node");
  const auto start = Clock::now();
  const CompiledInstance ci = compile(problem);
  Kernel kernel(problem, ci, options);
  kernel.run();

  SearchOutcome out;
  out.nodes = std::min(kernel.nodes(), options.budget);
  out.witness_count = kernel.found();
  if (kernel.found() > 0) {
    out.witness = kernel.witnesses().front();
    if (options.enumerate_all) out.witnesses = std::move(kernel.witnesses());
  }
  if (kernel.budget_hit() && (options.enumerate_all || kernel.found() == 0))
    out.status = SearchStatus::BudgetExceeded;
  else
    out.status = kernel.found() > 0 ? SearchStatus::Witness : SearchStatus::Exhausted;
  out.elapsed_ms = millis_since(start);
  return out;
}

Arrangement canonical_form(const Arrangement& arrangement, const Constraint& constraint) {
  // Pins fix positions, so pinned arrangements have no symmetry to remove.
  if (arrangement.shape == Shape::Linear || arrangement.elements.empty() || !constraint.pins.empty())
    return arrangement;
  const auto& e = arrangement.elements;
  const std::size_t n = e.size();
  const std::size_t m = std::size_t(std::min_element(e.begin(), e.end()) - e.begin());
  Arrangement out = arrangement;
  for (std::size_t i = 0; i < n; ++i) out.elements[i] = e[(m + i) % n];
  if (constraint.reversal_symmetric() && n >= 3) {
    Arrangement reflected = out;
    for (std::size_t i = 1; i < n; ++i) reflected.elements[i] = out.elements[n - i];
    if (reflected.elements < out.elements) return reflected;
  }
  return out;
}

BruteForceResult brute_force_enumerate(const Problem& problem) {
  problem.validate();
  const std::size_t n = problem.ground.size();
  if (n > kBruteForceLimit) throw CapacityError("brute_force_enumerate: ground set larger than 9");
  std::vector<GroupElement> perm = problem.ground;
  std::sort(perm.begin(), perm.end());
  std::set<std::vector<GroupElement>> seen;
  BruteForceResult result;
  do {
    Arrangement a{problem.group, problem.shape, perm};
    if (!check(a, problem.constraint).pass) continue;
    ++result.raw_count;
    seen.insert(canonical_form(a, problem.constraint).elements);
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.canonical_count = seen.size();
  if (seen.size() <= 1000)
    for (const auto& elements : seen) result.witnesses.push_back(Arrangement{problem.group, problem.shape, elements});
  return result;
}

// ---------------------------------------------------------------------------
// Pairings a_i + 2 b_i

namespace {

void validate_pairing_input(const GroupSpec& group, const std::vector<GroupElement>& ground) {
  if (ground.empty()) throw UsageError("pairing search: empty ground set");
  if (ground.size() > kPairingLimit) throw CapacityError("pairing search supports at most 6 elements");
  Arrangement{group, Shape::Linear, ground}.validate();
}

}  // namespace

PairingOutcome search_pairing(const GroupSpec& group, const std::vector<GroupElement>& ground,
                              std::uint64_t budget) {
  validate_pairing_input(group, ground);
  const auto start = Clock::now();
  std::vector<GroupElement> a = ground;
  std::sort(a.begin(), a.end());
  const std::size_t n = a.size();
  std::vector<std::vector<GroupElement>> label(n, std::vector<GroupElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) label[i][j] = group_add(group, a[i], group_scale(group, a[j], 2));

  PairingOutcome out;
  std::vector<std::size_t> sigma(n);
  std::vector<bool> taken(n, false);
  std::set<GroupElement> used;
  bool found = false, over = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      found = true;
      return;
    }
    for (std::size_t j = 0; j < n && !found && !over; ++j) {
      if (taken[j]) continue;
      if (++out.nodes > budget) {
        over = true;
        return;
      }
      if (used.count(label[i][j])) continue;
      taken[j] = true;
      used.insert(label[i][j]);
      sigma[i] = j;
      self(self, i + 1);
      if (found) return;
      used.erase(label[i][j]);
      taken[j] = false;
    }
  };
  rec(rec, 0);
  out.nodes = std::min(out.nodes, budget);
  if (found) {
    out.status = SearchStatus::Witness;
    for (std::size_t i = 0; i < n; ++i) out.pairs.emplace_back(a[i], a[sigma[i]]);
    if (!check_pairing(group, ground, out.pairs)) throw std::logic_error("pairing search produced an invalid pairing");
  } else {
    out.status = over ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  }
  out.elapsed_ms = millis_since(start);
  return out;
}

bool check_pairing(const GroupSpec& group, const std::vector<GroupElement>& ground,
                   const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
  std::vector<GroupElement> left, right, sorted_ground = ground;
  std::set<GroupElement> sums;
  for (const auto& [x, y] : pairs) {
    left.push_back(x);
    right.push_back(y);
    sums.insert(group_add(group, x, group_add(group, y, y)));
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::sort(sorted_ground.begin(), sorted_ground.end());
  return left == sorted_ground && right == sorted_ground && sums.size() == pairs.size();
}

std::uint64_t brute_force_pairings(const GroupSpec& group, const std::vector<GroupElement>& ground) {
  validate_pairing_input(group, ground);
  std::vector<GroupElement> a = ground;
  std::sort(a.begin(), a.end());
  std::vector<GroupElement> b = a;
  std::uint64_t count = 0;
  do {
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[i]);
    if (check_pairing(group, ground, pairs)) ++count;
  } while (std::next_permutation(b.begin(), b.end()));
  return count;
}

}  // namespace permlab
