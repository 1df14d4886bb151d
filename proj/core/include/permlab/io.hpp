#pragma once

#include <string>

#include "permlab/conjectures.hpp"
#include "permlab/constraint.hpp"
#include "permlab/search.hpp"

// JSON file formats. Every parse function throws UsageError on malformed
// input or schema violations.
//
//   group:       {"kind": "integers"} | {"kind": "integer_vectors", "rank": r}
//                | {"kind": "cyclic_product", "moduli": [m1, ...]}
//                | {"kind": "prime_field", "p": p}
//                | {"kind": "prime_power_field", "p": p, "degree": k}
//   element:     array of integers, even for rank-1 groups
//   arrangement: {"group", "shape": "linear"|"circular", "elements": [...]}
//   constraint:  {"clauses": [{"kind": "rainbow_sum", "modulus": 0} |
//                             {"kind": "edge_predicate",
//                              "predicate": {"kind": "prime_shift", "a": 2, "b": 1},
//                              "labeler": {"kind": "sum", "offset": 0}}, ...],
//                 "pins": {"first": element, "last": element}}
//   instance:    {"group", "shape", "ground_set": [...], "constraint"}
//   record:      {"conjecture", "params", "status", "witness", "nodes",
//                 "elapsed_ms", "tool_version"}, one per line

namespace permlab::io {

std::string emit_group(const GroupSpec& group);
GroupSpec parse_group(const std::string& text);

std::string emit_arrangement(const Arrangement& arrangement);
Arrangement parse_arrangement(const std::string& text);

std::string emit_constraint(const Constraint& constraint);
Constraint parse_constraint(const std::string& text, const GroupSpec& group);

std::string emit_instance(const Problem& problem);
Problem parse_instance(const std::string& text);

/// SearchOutcome as JSON: status, nodes, elapsed_ms, witness (arrangement or null).
std::string emit_outcome(const SearchOutcome& outcome);

/// One JSONL line, without the trailing newline.
std::string emit_record(const conj::Record& record);
conj::Record parse_record(const std::string& line);

/// Resume key: conjecture id and the canonical params dump.
std::string record_key(const std::string& conjecture, const conj::Params& params);

/// First line of a campaign file. Readers skip it.
std::string emit_header(const std::string& conjecture, const conj::RangeSpec& range, std::uint64_t budget);
bool is_header(const std::string& line);

/// Whole-file helpers; read_file throws UsageError when the file is missing.
std::string read_file(const std::string& path);

}  // namespace permlab::io
