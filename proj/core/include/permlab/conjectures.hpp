#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permlab/constraint.hpp"
#include "permlab/search.hpp"

namespace permlab::conj {

/// Integer-valued instance parameters, e.g. {"n": 20} or {"q": 11, "a0": 10}.
using Params = std::map<std::string, std::int64_t>;

/// "3.1" ... "3.18", "filz", "thm1.6-range".
const std::vector<std::string>& conjecture_ids();
bool is_conjecture_id(const std::string& id);
/// One-line description of the id's parameters, for --help style output.
std::string params_help(const std::string& id);

struct Instance {
  std::string id;
  Params params;
  std::string description;

  /// Set when the conjecture's hypothesis fails for these parameters.
  std::optional<std::string> skipped;

  Problem problem;
  /// Conditional statements: the conclusion is only tested when this
  /// unconstrained version has a witness.
  std::optional<Problem> hypothesis;
  /// Two-numbering problem over problem.ground (all a + 2b distinct).
  bool pairing = false;
  /// An excepted case of the statement: exhaustion is the predicted outcome.
  bool expect_exhausted = false;
};

/// Builds the search instance. Throws UsageError on schema violations.
Instance instance(const std::string& id, const Params& params);

enum class RecordStatus { Witness, Exhausted, Budget, SkippedPrecondition };
std::string to_string(RecordStatus status);
RecordStatus record_status_from_string(const std::string& name);

struct Record {
  std::string conjecture;
  Params params;
  RecordStatus status = RecordStatus::Exhausted;
  /// Arrangement elements, or for pairings the partners b_1..b_n of the
  /// ascending ground elements a_1 < ... < a_n.
  std::optional<std::vector<GroupElement>> witness;
  std::uint64_t nodes = 0;
  std::uint64_t elapsed_ms = 0;
  std::string tool_version;
};

/// Runs one instance. Witnesses are re-checked before the record is built.
Record run_instance(const Instance& inst, std::uint64_t budget);
Record run(const std::string& id, const Params& params, std::uint64_t budget);

/// Re-validates a record offline: rebuilds the instance and checks the
/// witness. True for non-witness records.
bool recheck(const Record& record);

/// True when the statement itself predicts that this instance has no solution.
bool expected_exhausted(const std::string& id, const Params& params);

struct RangeSpec {
  std::int64_t from = 0;
  std::int64_t to = 0;
  /// Instance family; empty selects the id's default family.
  std::string family;
  std::uint64_t seed = 0;
  /// Parameters fixed by the caller (e.g. part=2); other parts/options are
  /// enumerated.
  Params fixed;
};

/// Expands a range into the instance parameter list, in a deterministic order.
std::vector<Params> enumerate_range(const std::string& id, const RangeSpec& range);
/// Families accepted by enumerate_range for this id.
std::vector<std::string> families(const std::string& id);

struct CampaignOptions {
  std::size_t jobs = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct Task {
  std::string id;
  Params params;
};

/// Runs the tasks on a worker pool. `sink` is called on the calling thread,
/// once per task, in task order.
void run_campaign(const std::vector<Task>& tasks, const CampaignOptions& options,
                  const std::function<void(const Record&)>& sink);

// Fixtures -------------------------------------------------------------------

struct GoldenFixture {
  std::string name;
  std::string id;
  Params params;
  std::vector<std::int64_t> elements;
  /// Check against the instance's hypothesis problem instead of its conclusion.
  bool hypothesis = false;
};

/// Published witness permutations, with their instances.
const std::vector<GoldenFixture>& golden_fixtures();

struct CounterexampleFixture {
  std::string name;
  std::string id;
  Params params;
  Problem problem;
};

/// Instances known to have no solution.
std::vector<CounterexampleFixture> counterexample_fixtures();

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic text (no timings)
};

/// Checks every golden fixture and searches every counterexample fixture.
std::vector<FixtureResult> run_fixtures(std::uint64_t budget = kDefaultBudget);

// Lemmas ---------------------------------------------------------------------

/// For the x^2 + y edge predicates "2k+1 is prime" and "4k-1 is prime": for
/// all x, y in 0..n with x + y > 1 and 3 | y, if x^2 + y passes then 3 | x.
/// With 0 pinned first this forces the last element to be 1, since every
/// other choice makes all elements multiples of 3.
bool multiple_of_three_lemma_holds(const nt::PredicateSpec& spec, std::int64_t n);

}  // namespace permlab::conj
