#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "permlab/check.hpp"
#include "permlab/conjectures.hpp"
#include "permlab/constructions.hpp"
#include "permlab/errors.hpp"
#include "permlab/io.hpp"
#include "permlab/search.hpp"
#include "permlab/version.hpp"

namespace permlab::cli {

namespace {

std::uint64_t env_budget() {
  const char* text = std::getenv("PERMLAB_BUDGET");
  if (!text || !*text) return kDefaultBudget;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != std::string(text).size() || v == 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("PERMLAB_BUDGET must be a positive integer, got '") + text + "'");
  }
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

conj::Params parse_params(const std::vector<std::string>& items) {
  conj::Params params;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("parameters are written key=value, got '" + item + "'");
    params[item.substr(0, eq)] = parse_int(item.substr(eq + 1));
  }
  return params;
}

// "3,1,-2" for integers; "1:0,0:1" for integer vectors of rank 2.
std::pair<GroupSpec, std::vector<GroupElement>> parse_elements(const std::string& text) {
  std::vector<GroupElement> xs;
  std::size_t width = 0;
  for (const auto& item : split(text, ',')) {
    GroupElement x;
    for (const auto& c : split(item, ':')) x.coords.push_back(parse_int(c));
    if (width != 0 && x.coords.size() != width) throw UsageError("elements must all have the same number of coordinates");
    width = x.coords.size();
    xs.push_back(x);
  }
  if (xs.empty()) throw UsageError("--elements is empty");
  const GroupSpec g = width == 1 ? GroupSpec::integers() : GroupSpec::integer_vectors(std::uint32_t(width));
  return {g, xs};
}

std::vector<i128> scalars(const std::vector<GroupElement>& xs) {
  std::vector<i128> out;
  for (const auto& x : xs) {
    if (x.coords.size() != 1) throw UsageError("this construction takes integers");
    out.push_back(x.coords[0]);
  }
  return out;
}

const std::vector<std::string> kConstructions = {"thm1.1", "cor1.1", "thm1.2i", "thm1.2ii", "thm1.3",
                                            "thm1.4", "thm1.5", "thm1.6",  "rem1.2",   "rem3.11"};

struct ConstructArgs {
  std::string name;
  std::optional<std::int64_t> n, q;
  std::optional<std::string> elements;
  std::string op = "sum", target = "S";
  bool show_branch = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  auto need_n = [&] {
    if (!a.n) throw UsageError(a.name + " needs --n");
    return *a.n;
  };
  auto need_elements = [&] {
    if (!a.elements) throw UsageError(a.name + " needs --elements");
    return parse_elements(*a.elements);
  };
  std::optional<cons::Construction> built;
  const std::string& t = a.name;
  if (t == "thm1.1") built = cons::zigzag_distances(scalars(need_elements().second));
  else if (t == "cor1.1") {
    const auto n = need_n();
    if (n < 1) throw UsageError("--n must be positive");
    built = cons::prime_circle_distinct_distances(std::size_t(n));
  } else if (t == "thm1.2i") built = cons::circular_distinct_diffs(need_n());
  else if (t == "thm1.2ii") built = cons::mod_distinct_diffs(need_n());
  else if (t == "thm1.3") {
    const auto [g, xs] = need_elements();
    built = cons::weighted_sum_cycle(g, xs);
  } else if (t == "thm1.4") {
    const auto [g, xs] = need_elements();
    built = cons::triple_sum_cycle(g, xs);
  } else if (t == "thm1.5") built = cons::reduced_residue_cycle(need_n());
  else if (t == "thm1.6") {
    if (!a.q) throw UsageError("thm1.6 needs --q");
    built = cons::qr_cycle(*a.q, cons::qr_operation_from_string(a.op), cons::qr_target_from_string(a.target));
    if (!built) {
      out << "NotFound: no primitive g makes q=" << *a.q << " " << a.op << "/" << a.target << " work\n";
      return kNegative;
    }
  } else if (t == "rem1.2") built = cons::coprime_circle_odd(need_n());
  else if (t == "rem3.11") built = cons::repair_adjacent_sums(scalars(need_elements().second));
  else throw UsageError("unknown construction '" + t + "'");
  out << io::emit_arrangement(built->arrangement) << "\n";
  if (a.show_branch) err << "branch: " << built->branch << "\n";
  return kOk;
}

struct CheckArgs {
  std::string arrangement;
  std::optional<std::string> conjecture, constraint;
  std::vector<std::string> params;
  bool hypothesis = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Arrangement arr = io::parse_arrangement(io::read_file(a.arrangement));
  CheckReport report;
  if (a.conjecture) {
    if (a.constraint) throw UsageError("give either --conjecture or --constraint, not both");
    const conj::Instance inst = conj::instance(*a.conjecture, parse_params(a.params));
    if (inst.pairing) throw UsageError("two-numbering instances have no arrangement to check");
    if (a.hypothesis && !inst.hypothesis) throw UsageError("conjecture " + inst.id + " has no hypothesis problem");
    report = check(arr, a.hypothesis ? *inst.hypothesis : inst.problem);
  } else if (a.constraint) {
    report = check(arr, io::parse_constraint(io::read_file(*a.constraint), arr.group));
  } else {
    throw UsageError("check needs --conjecture ID or --constraint FILE");
  }
  if (report.pass) {
    out << "pass\n";
    return kOk;
  }
  out << "fail: " << report.message << "\n";
  if (report.clause) out << "clause: " << *report.clause << "\n";
  if (!report.positions.empty()) {
    out << "positions:";
    for (auto p : report.positions) out << " " << p;
    out << "\n";
  }
  return kNegative;
}

struct SearchArgs {
  std::string instance;
  std::optional<std::uint64_t> budget;
  bool all_small = false;
};

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Witness: return kOk;
    case SearchStatus::Exhausted: return kNegative;
    case SearchStatus::BudgetExceeded: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const Problem problem = io::parse_instance(io::read_file(a.instance));
  const std::uint64_t budget = a.budget ? *a.budget : env_budget();
  if (a.all_small && problem.ground.size() > kBruteForceLimit)
    throw CapacityError("--all-small needs at most " + std::to_string(kBruteForceLimit) + " elements");
  const SearchOutcome outcome = search(problem, SearchOptions{budget});
  out << io::emit_outcome(outcome) << "\n";
  int code = status_code(outcome.status);
  if (a.all_small) {
    const BruteForceResult brute = brute_force_enumerate(problem);
    SearchOptions all{budget};
    all.enumerate_all = true;
    const SearchOutcome every = search(problem, all);
    std::ostringstream line;
    if (every.status == SearchStatus::BudgetExceeded) {
      line << "{\"all_small\":{\"brute_force_count\":" << brute.canonical_count << ",\"search_count\":null}}";
      out << line.str() << "\n";
      return kInconclusive;
    }
    const bool agree = brute.canonical_count == every.witness_count &&
                       (brute.canonical_count > 0) == (outcome.status == SearchStatus::Witness);
    line << "{\"all_small\":{\"brute_force_count\":" << brute.canonical_count
         << ",\"search_count\":" << every.witness_count << ",\"agree\":" << (agree ? "true" : "false") << "}}";
    out << line.str() << "\n";
    if (!agree) code = kNegative;
  }
  return code;
}

struct VerifyArgs {
  std::string conjecture;
  std::int64_t from = 0, to = 0;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> out_path;
  bool resume = false;
  std::string family;
  std::uint64_t seed = 0;
  std::vector<std::string> params;
};

struct ResumeState {
  std::map<std::string, conj::Record> done;
  bool has_header = false;
};

// Reads a record file, dropping a truncated final line. The file is
// rewritten when something had to be dropped.
ResumeState load_for_resume(const std::string& path, std::ostream& err) {
  ResumeState state;
  const std::string text = io::read_file(path);
  std::vector<std::string> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::vector<std::string> kept;
  bool rewrite = !text.empty() && text.back() != '\n';
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (io::is_header(line)) {
      state.has_header = true;
      kept.push_back(line);
      continue;
    }
    try {
      conj::Record r = io::parse_record(line);
      if (!conj::recheck(r)) throw PostconditionError("stored witness fails re-check: " + line);
      state.done[io::record_key(r.conjecture, r.params)] = r;
      kept.push_back(line);
    } catch (const UsageError&) {
      if (i + 1 != lines.size()) throw UsageError("corrupt record on line " + std::to_string(i + 1) + " of " + path);
      err << "dropping truncated final line of " << path << "\n";
      rewrite = true;
    }
  }
  if (rewrite) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    for (const auto& l : kept) f << l << "\n";
  }
  return state;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!conj::is_conjecture_id(a.conjecture)) throw UsageError("unknown conjecture id '" + a.conjecture + "'");
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (a.resume && !a.out_path) throw UsageError("--resume needs --out");
  conj::RangeSpec range{a.from, a.to, a.family, a.seed, parse_params(a.params)};
  const std::uint64_t budget = a.budget ? *a.budget : env_budget();
  const auto plan = conj::enumerate_range(a.conjecture, range);
  // Build every instance up front so schema errors surface before any search.
  for (const auto& p : plan) (void)conj::instance(a.conjecture, p);

  ResumeState state;
  if (a.resume && std::filesystem::exists(*a.out_path)) state = load_for_resume(*a.out_path, err);

  std::ofstream file;
  if (a.out_path) {
    file.open(*a.out_path, std::ios::binary | (a.resume ? std::ios::app : std::ios::trunc));
    if (!file) throw UsageError("cannot write '" + *a.out_path + "'");
    if (!state.has_header) file << io::emit_header(a.conjecture, range, budget) << "\n" << std::flush;
  }
  std::ostream& sink_stream = a.out_path ? static_cast<std::ostream&>(file) : out;

  std::vector<conj::Task> tasks;
  std::vector<conj::Record> records;
  std::size_t resumed = 0;
  for (const auto& p : plan) {
    auto it = state.done.find(io::record_key(a.conjecture, p));
    if (it != state.done.end()) {
      records.push_back(it->second);
      ++resumed;
    } else {
      tasks.push_back({a.conjecture, p});
    }
  }
  conj::run_campaign(tasks, conj::CampaignOptions{a.jobs, budget}, [&](const conj::Record& r) {
    sink_stream << io::emit_record(r) << "\n" << std::flush;
    records.push_back(r);
  });

  std::map<conj::RecordStatus, std::size_t> counts;
  std::size_t violations = 0, conforming = 0;
  std::ostream& report = a.out_path ? out : err;
  for (const auto& r : records) {
    ++counts[r.status];
    const bool expected = conj::expected_exhausted(r.conjecture, r.params);
    const std::string key = io::record_key(r.conjecture, r.params);
    if (r.status == conj::RecordStatus::Exhausted) {
      if (expected) {
        ++conforming;
        report << "conforming: " << key << " exhausted as the statement's exception predicts\n";
      } else {
        ++violations;
        err << "*** VIOLATION: " << key << " exhausted: no arrangement exists ***\n";
      }
    } else if (r.status == conj::RecordStatus::Witness && expected) {
      report << "note: " << key << " is an excepted case but has a witness\n";
    } else if (r.status == conj::RecordStatus::Budget) {
      report << "inconclusive: " << key << " hit the node budget\n";
    }
  }
  report << "conjecture " << a.conjecture << ": " << records.size() << " instances, "
         << counts[conj::RecordStatus::Witness] << " witness, " << counts[conj::RecordStatus::Exhausted]
         << " exhausted (" << conforming << " expected), " << counts[conj::RecordStatus::Budget] << " budget, "
         << counts[conj::RecordStatus::SkippedPrecondition] << " skipped-precondition; searched " << tasks.size()
         << ", resumed " << resumed << "\n";
  if (violations > 0) return kNegative;
  if (counts[conj::RecordStatus::Budget] > 0) return kInconclusive;
  return kOk;
}

int cmd_fixtures(std::optional<std::uint64_t> budget, std::ostream& out) {
  const auto results = conj::run_fixtures(budget ? *budget : env_budget());
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << results.size() << " fixtures pass\n";
  return passed == results.size() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permlab: permutations with constrained adjacent labels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build an arrangement from an explicit construction");
  c->add_option("construction", construct.name, "One of thm1.1 cor1.1 thm1.2i thm1.2ii thm1.3 thm1.4 thm1.5 thm1.6 rem1.2 rem3.11")
      ->required()
      ->check(CLI::IsMember(kConstructions));
  c->add_option("--n", construct.n, "Size parameter");
  c->add_option("--elements", construct.elements, "Comma-separated integers (coordinates joined by ':')");
  c->add_option("--q", construct.q, "Field size for thm1.6");
  c->add_option("--op", construct.op, "sum or diff (thm1.6)")->check(CLI::IsMember({"sum", "diff"}));
  c->add_option("--target", construct.target, "S or T (thm1.6)")->check(CLI::IsMember({"S", "T"}));
  c->add_flag("--branch", construct.show_branch, "Print the construction branch to stderr");

  CheckArgs checkargs;
  auto* k = app.add_subcommand("check", "Check an arrangement file");
  k->add_option("--arrangement", checkargs.arrangement, "Arrangement JSON file")->required();
  k->add_option("--conjecture", checkargs.conjecture, "Conjecture id whose instance to check against");
  k->add_option("--params", checkargs.params, "Instance parameters key=value");
  k->add_option("--constraint", checkargs.constraint, "Constraint JSON file");
  k->add_flag("--hypothesis", checkargs.hypothesis, "Check against the conjecture's hypothesis problem");

  SearchArgs searchargs;
  auto* s = app.add_subcommand("search", "Search an instance file");
  s->add_option("--instance", searchargs.instance, "Instance JSON file")->required();
  s->add_option("--budget", searchargs.budget, "Node budget");
  s->add_flag("--all-small", searchargs.all_small, "Also run the brute-force oracle (at most 9 elements)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Search a range of conjecture instances");
  v->add_option("--conjecture", verify.conjecture, "Conjecture id")->required();
  v->add_option("--from", verify.from, "First range value")->required();
  v->add_option("--to", verify.to, "Last range value")->required();
  v->add_option("--jobs", verify.jobs, "Worker threads");
  v->add_option("--budget", verify.budget, "Node budget per instance");
  v->add_option("--out", verify.out_path, "JSONL record file");
  v->add_flag("--resume", verify.resume, "Skip instances already recorded in --out");
  v->add_option("--family", verify.family, "Instance family");
  v->add_option("--seed", verify.seed, "Seed for random families");
  v->add_option("--params", verify.params, "Fixed parameters key=value");

  std::optional<std::uint64_t> fixture_budget;
  auto* f = app.add_subcommand("fixtures", "Check the golden witnesses and known impossible instances");
  f->add_option("--budget", fixture_budget, "Node budget per search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_construct(construct, out, err);
    if (k->parsed()) return cmd_check(checkargs, out);
    if (s->parsed()) return cmd_search(searchargs, out);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (f->parsed()) return cmd_fixtures(fixture_budget, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}

}  // namespace permlab::cli
