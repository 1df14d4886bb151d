#include "permlab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "permlab/errors.hpp"
#include "permlab/version.hpp"

namespace permlab::io {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto schema(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw UsageError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

json group_json(const GroupSpec& g) {
  switch (g.kind()) {
    case GroupKind::Integers: return json{{"kind", "integers"}};
    case GroupKind::IntegerVectors: return json{{"kind", "integer_vectors"}, {"rank", g.rank()}};
    case GroupKind::CyclicProduct: return json{{"kind", "cyclic_product"}, {"moduli", g.moduli()}};
    case GroupKind::PrimeField: return json{{"kind", "prime_field"}, {"p", g.characteristic()}};
    case GroupKind::PrimePowerField:
      return json{{"kind", "prime_power_field"}, {"p", g.characteristic()}, {"degree", g.degree()}};
  }
  return json();
}

GroupSpec group_from(const json& j) {
  const auto kind = schema("group", [&] { return field(j, "kind").get<std::string>(); });
  if (kind == "integers") return GroupSpec::integers();
  if (kind == "integer_vectors") {
    const auto r = integer(field(j, "rank"), "rank");
    if (r < 1 || r > 64) throw UsageError("rank must be in 1..64");
    return GroupSpec::integer_vectors(std::uint32_t(r));
  }
  if (kind == "cyclic_product") {
    const json& m = field(j, "moduli");
    if (!m.is_array()) throw UsageError("moduli must be an array");
    std::vector<std::int64_t> moduli;
    for (const auto& x : m) moduli.push_back(integer(x, "modulus"));
    return GroupSpec::cyclic_product(moduli);
  }
  if (kind == "prime_field") return GroupSpec::prime_field(integer(field(j, "p"), "p"));
  if (kind == "prime_power_field") {
    const auto d = integer(field(j, "degree"), "degree");
    if (d < 1 || d > 20) throw UsageError("degree must be in 1..20");
    return GroupSpec::prime_power_field(integer(field(j, "p"), "p"), std::uint32_t(d));
  }
  throw UsageError("unknown group kind '" + kind + "'");
}

json element_json(const GroupElement& x) {
  json out = json::array();
  for (i128 c : x.coords) out.push_back(std::int64_t(c));
  return out;
}

GroupElement element_from(const json& j, const GroupSpec& g) {
  if (!j.is_array()) throw UsageError("element must be an array of integers");
  GroupElement x;
  for (const auto& c : j) x.coords.push_back(integer(c, "element coordinate"));
  validate_element(g, x);
  return x;
}

json elements_json(const std::vector<GroupElement>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(element_json(x));
  return out;
}

std::vector<GroupElement> elements_from(const json& j, const GroupSpec& g) {
  if (!j.is_array()) throw UsageError("elements must be an array");
  std::vector<GroupElement> out;
  for (const auto& x : j) out.push_back(element_from(x, g));
  return out;
}

Shape shape_from(const json& j) {
  if (!j.is_string()) throw UsageError("shape must be a string");
  return shape_from_string(j.get<std::string>());
}

json constraint_json(const Constraint& c) {
  json clauses = json::array();
  for (const auto& cl : c.clauses) {
    if (cl.is_rainbow()) {
      clauses.push_back(json{{"kind", to_string(cl.kind)}, {"modulus", cl.modulus}});
      continue;
    }
    json pred{{"kind", nt::to_string(cl.predicate.kind)}};
    switch (cl.predicate.kind) {
      case nt::PredicateKind::PrimeShift:
        pred["a"] = cl.predicate.a;
        pred["b"] = cl.predicate.b;
        break;
      case nt::PredicateKind::PrimitiveRootMod:
      case nt::PredicateKind::QuadraticResidueMod:
      case nt::PredicateKind::QuadraticNonresidueMod: pred["p"] = cl.predicate.p; break;
      case nt::PredicateKind::CoprimeTo: pred["m"] = cl.predicate.p; break;
      case nt::PredicateKind::FieldPrimitive:
      case nt::PredicateKind::FieldSquare:
      case nt::PredicateKind::FieldNonsquare:
        pred["p"] = cl.predicate.p;
        pred["degree"] = cl.predicate.degree;
        break;
      default: break;
    }
    clauses.push_back(json{{"kind", to_string(cl.kind)},
                           {"predicate", pred},
                           {"labeler", json{{"kind", to_string(cl.labeler.kind)}, {"offset", cl.labeler.offset}}}});
  }
  json pins = json::object();
  if (c.pins.first) pins["first"] = element_json(*c.pins.first);
  if (c.pins.last) pins["last"] = element_json(*c.pins.last);
  return json{{"clauses", clauses}, {"pins", pins}};
}

nt::PredicateSpec predicate_from(const json& j) {
  const auto kind = schema("predicate", [&] { return nt::predicate_kind_from_string(field(j, "kind").get<std::string>()); });
  auto num = [&](const char* key) { return integer(field(j, key), key); };
  nt::PredicateSpec spec;
  switch (kind) {
    case nt::PredicateKind::PrimeShift: spec = nt::PredicateSpec::prime_shift(num("a"), num("b")); break;
    case nt::PredicateKind::TwinIndex: spec = nt::PredicateSpec::twin_index(); break;
    case nt::PredicateKind::SophieGermainIndex: spec = nt::PredicateSpec::sophie_germain_index(); break;
    case nt::PredicateKind::PrimitiveRootMod: spec = nt::PredicateSpec::primitive_root_mod(num("p")); break;
    case nt::PredicateKind::QuadraticResidueMod: spec = nt::PredicateSpec::quadratic_residue_mod(num("p")); break;
    case nt::PredicateKind::QuadraticNonresidueMod: spec = nt::PredicateSpec::quadratic_nonresidue_mod(num("p")); break;
    case nt::PredicateKind::CoprimeTo: spec = nt::PredicateSpec::coprime_to(num("m")); break;
    case nt::PredicateKind::PrimePredicate: spec = nt::PredicateSpec::prime(); break;
    case nt::PredicateKind::FieldPrimitive: spec = nt::PredicateSpec::field_primitive(num("p"), num("degree")); break;
    case nt::PredicateKind::FieldSquare: spec = nt::PredicateSpec::field_square(num("p"), num("degree")); break;
    case nt::PredicateKind::FieldNonsquare: spec = nt::PredicateSpec::field_nonsquare(num("p"), num("degree")); break;
  }
  spec.validate();
  return spec;
}

Constraint constraint_from(const json& j, const GroupSpec& g) {
  Constraint c;
  const json& clauses = field(j, "clauses");
  if (!clauses.is_array()) throw UsageError("clauses must be an array");
  for (const auto& cl : clauses) {
    const auto kind = schema("clause", [&] { return clause_kind_from_string(field(cl, "kind").get<std::string>()); });
    if (kind != ClauseKind::EdgePredicate) {
      c.clauses.push_back(Clause::rainbow(kind, cl.contains("modulus") ? integer(cl.at("modulus"), "modulus") : 0));
      continue;
    }
    const json& lab = field(cl, "labeler");
    Labeler labeler;
    labeler.kind = schema("labeler", [&] { return labeler_kind_from_string(field(lab, "kind").get<std::string>()); });
    if (lab.contains("offset")) labeler.offset = integer(lab.at("offset"), "offset");
    c.clauses.push_back(Clause::edge(predicate_from(field(cl, "predicate")), labeler));
  }
  if (j.contains("pins")) {
    const json& pins = j.at("pins");
    if (!pins.is_object()) throw UsageError("pins must be an object");
    if (pins.contains("first") && !pins.at("first").is_null()) c.pins.first = element_from(pins.at("first"), g);
    if (pins.contains("last") && !pins.at("last").is_null()) c.pins.last = element_from(pins.at("last"), g);
  }
  c.validate(g);
  return c;
}

json params_json(const conj::Params& params) {
  json out = json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

}  // namespace

std::string emit_group(const GroupSpec& group) { return group_json(group).dump(); }

GroupSpec parse_group(const std::string& text) { return group_from(parse_text(text)); }

std::string emit_arrangement(const Arrangement& a) {
  return json{{"group", group_json(a.group)}, {"shape", to_string(a.shape)}, {"elements", elements_json(a.elements)}}
      .dump();
}

Arrangement parse_arrangement(const std::string& text) {
  const json j = parse_text(text);
  Arrangement a;
  a.group = group_from(field(j, "group"));
  a.shape = shape_from(field(j, "shape"));
  a.elements = elements_from(field(j, "elements"), a.group);
  a.validate();
  return a;
}

std::string emit_constraint(const Constraint& constraint) { return constraint_json(constraint).dump(); }

Constraint parse_constraint(const std::string& text, const GroupSpec& group) {
  return constraint_from(parse_text(text), group);
}

std::string emit_instance(const Problem& p) {
  return json{{"group", group_json(p.group)},
              {"shape", to_string(p.shape)},
              {"ground_set", elements_json(p.ground)},
              {"constraint", constraint_json(p.constraint)}}
      .dump();
}

Problem parse_instance(const std::string& text) {
  const json j = parse_text(text);
  Problem p;
  p.group = group_from(field(j, "group"));
  p.shape = shape_from(field(j, "shape"));
  p.ground = elements_from(field(j, "ground_set"), p.group);
  p.constraint = constraint_from(field(j, "constraint"), p.group);
  p.validate();
  return p;
}

std::string emit_outcome(const SearchOutcome& o) {
  json out{{"status", to_string(o.status)}, {"nodes", o.nodes}, {"elapsed_ms", o.elapsed_ms}};
  out["witness"] = o.witness ? json::parse(emit_arrangement(*o.witness)) : json();
  return out.dump();
}

std::string emit_record(const conj::Record& r) {
  json out;
  out["conjecture"] = r.conjecture;
  out["params"] = params_json(r.params);
  out["status"] = conj::to_string(r.status);
  out["witness"] = r.witness ? elements_json(*r.witness) : json();
  out["nodes"] = r.nodes;
  out["elapsed_ms"] = r.elapsed_ms;
  out["tool_version"] = r.tool_version;
  return out.dump();
}

conj::Record parse_record(const std::string& line) {
  const json j = parse_text(line);
  conj::Record r;
  r.conjecture = schema("record", [&] { return field(j, "conjecture").get<std::string>(); });
  const json& params = field(j, "params");
  if (!params.is_object()) throw UsageError("params must be an object");
  for (const auto& [k, v] : params.items()) r.params[k] = integer(v, "param");
  r.status = conj::record_status_from_string(schema("record", [&] { return field(j, "status").get<std::string>(); }));
  const json& w = field(j, "witness");
  if (!w.is_null()) {
    if (!w.is_array()) throw UsageError("witness must be an array or null");
    std::vector<GroupElement> xs;
    for (const auto& x : w) {
      if (!x.is_array()) throw UsageError("witness elements must be arrays");
      GroupElement e;
      for (const auto& c : x) e.coords.push_back(integer(c, "witness coordinate"));
      xs.push_back(e);
    }
    r.witness = std::move(xs);
  }
  r.nodes = schema("record", [&] { return field(j, "nodes").get<std::uint64_t>(); });
  r.elapsed_ms = schema("record", [&] { return field(j, "elapsed_ms").get<std::uint64_t>(); });
  r.tool_version = schema("record", [&] { return field(j, "tool_version").get<std::string>(); });
  return r;
}

std::string record_key(const std::string& conjecture, const conj::Params& params) {
  return conjecture + " " + params_json(params).dump();
}

std::string emit_header(const std::string& conjecture, const conj::RangeSpec& range, std::uint64_t budget) {
  json h;
  h["conjecture"] = conjecture;
  h["from"] = range.from;
  h["to"] = range.to;
  h["family"] = range.family;
  h["seed"] = range.seed;
  h["fixed"] = params_json(range.fixed);
  h["budget"] = budget;
  h["tool_version"] = kToolVersion;
  return json{{"permlab_header", h}}.dump();
}

bool is_header(const std::string& line) { return line.rfind("{\"permlab_header\"", 0) == 0; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace permlab::io
