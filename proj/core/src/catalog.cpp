#include "qx/catalog.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qx/errors.hpp"

namespace qx {

namespace {

using nlohmann::json;

const std::set<std::string> kFields = {"id",          "problem_name",   "classical_runtime",   "quantum_runtime",
                                       "qubit_requirement", "data_loading", "size_semantics",
                                       "runtime_class_label", "tags",       "citation"};

std::string require_string(const json& item, const std::string& key, std::size_t row) {
  auto it = item.find(key);
  if (it == item.end()) throw SchemaError("missing field '" + key + "'", row);
  if (!it->is_string()) throw SchemaError("field '" + key + "' must be a string", row);
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& item, const std::string& key, std::size_t row) {
  auto it = item.find(key);
  if (it == item.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw SchemaError("field '" + key + "' must be a string", row);
  return it->get<std::string>();
}

Expr parse_field(const std::string& text, const std::string& key, std::size_t row) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ExpressionError(key + ": " + e.what(), row, e.offset());
  }
}

CatalogEntry parse_entry(const json& item, std::size_t row) {
  if (!item.is_object()) throw SchemaError("entry must be an object", row);
  for (const auto& [key, value] : item.items()) {
    if (!kFields.contains(key)) throw SchemaError("unknown field '" + key + "'", row);
  }

  CatalogEntry e;
  e.id = require_string(item, "id", row);
  if (e.id.empty()) throw SchemaError("empty id", row);
  e.problem_name = require_string(item, "problem_name", row);
  e.classical_text = require_string(item, "classical_runtime", row);
  e.quantum_text = optional_string(item, "quantum_runtime", row);
  e.qubit_text = optional_string(item, "qubit_requirement", row);
  e.loading_text = optional_string(item, "data_loading", row);
  e.runtime_class_label = require_string(item, "runtime_class_label", row);
  e.citation = require_string(item, "citation", row);
  try {
    e.size_semantics = size_semantics_from_string(require_string(item, "size_semantics", row));
  } catch (const ValidationError& err) {
    throw SchemaError(err.what(), row);
  }

  auto tags = item.find("tags");
  if (tags == item.end() || !tags->is_array()) throw SchemaError("field 'tags' must be an array", row);
  for (const json& t : *tags) {
    if (!t.is_string()) throw SchemaError("tags must be strings", row);
    e.tags.push_back(t.get<std::string>());
  }

  if (e.quantum_text.has_value() != e.qubit_text.has_value()) {
    throw SchemaError("quantum_runtime and qubit_requirement must be given together", row);
  }
  if (e.loading_text && !e.quantum_text) throw SchemaError("data_loading requires quantum_runtime", row);

  e.classical_runtime = parse_field(e.classical_text, "classical_runtime", row);
  if (e.quantum_text) e.quantum_runtime = parse_field(*e.quantum_text, "quantum_runtime", row);
  if (e.qubit_text) e.qubit_requirement = parse_field(*e.qubit_text, "qubit_requirement", row);
  if (e.loading_text) e.data_loading = parse_field(*e.loading_text, "data_loading", row);
  Expr label = parse_field(e.runtime_class_label, "runtime_class_label", row);

  if (asymptotic_compare(label, e.classical_runtime) != Order::Equal) {
    throw SchemaError("runtime_class_label '" + e.runtime_class_label + "' is not of the same order as '" +
                          e.classical_text + "'",
                      row);
  }
  if (e.qubit_requirement) {
    if (eval_log10(*e.qubit_requirement, std::log10(2.0)).log10() < -1e-12) {
      throw SchemaError("qubit_requirement is below 1 at n = 2", row);
    }
    try {
      check_monotone_requirement(*e.qubit_requirement);
    } catch (const NonMonotoneQubitRequirement& err) {
      throw SchemaError(err.what(), row);
    }
  }
  return e;
}

json entry_to_json(const CatalogEntry& e) {
  json j = json::object();
  j["id"] = e.id;
  j["problem_name"] = e.problem_name;
  j["classical_runtime"] = e.classical_text;
  if (e.quantum_text) j["quantum_runtime"] = *e.quantum_text;
  if (e.qubit_text) j["qubit_requirement"] = *e.qubit_text;
  if (e.loading_text) j["data_loading"] = *e.loading_text;
  j["size_semantics"] = to_string(e.size_semantics);
  j["runtime_class_label"] = e.runtime_class_label;
  j["tags"] = e.tags;
  j["citation"] = e.citation;
  return j;
}

}  // namespace

AlgorithmPair CatalogEntry::pair() const {
  if (!quantum_runtime || !qubit_requirement) throw std::logic_error("entry '" + id + "' has no quantum pair");
  AlgorithmPair p;
  p.id = id;
  p.problem_name = problem_name;
  p.classical_runtime = classical_runtime;
  p.quantum_runtime = *quantum_runtime;
  p.qubit_requirement = *qubit_requirement;
  p.data_loading = data_loading;
  p.size_semantics = size_semantics;
  p.citation = citation;
  return p;
}

std::vector<CatalogEntry> parse_catalog(std::string_view json_text) {
  if (json_text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_array()) throw SchemaError("catalog must be a JSON array", 0);

  std::vector<CatalogEntry> entries;
  std::set<std::string> ids;
  std::size_t row = 0;
  for (const json& item : doc) {
    ++row;
    CatalogEntry e = parse_entry(item, row);
    if (!ids.insert(e.id).second) throw SchemaError("duplicate id '" + e.id + "'", row);
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string(), 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
  json doc = json::array();
  for (const CatalogEntry& e : entries) doc.push_back(entry_to_json(e));
  return doc.dump(2) + "\n";
}

void save_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_catalog(entries);
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view id) {
  for (const CatalogEntry& e : entries) {
    if (e.id == id) return e;
  }
  throw UnknownEntry(std::string(id));
}

std::vector<ClassifiedEntry> classify_catalog(const std::vector<CatalogEntry>& entries,
                                              const HardwareScenario& scenario, bool canonical_quantum) {
  const LogMagnitude c = scenario_constant(scenario);
  std::vector<ClassifiedEntry> out;
  auto add = [&](const CatalogEntry& e, std::string label, const Expr& quantum) {
    try {
      Threshold t = solve_threshold(e.classical_runtime, quantum, c);
      out.push_back({&e, std::move(label), t, classify(t)});
    } catch (const SolverError&) {
      out.push_back({&e, std::move(label), std::nullopt, TrafficLight::Yellow});
    }
  };
  for (const CatalogEntry& e : entries) {
    if (e.has_quantum_pair()) {
      add(e, "pair", effective_quantum_runtime(e.pair()).runtime);
    } else if (canonical_quantum) {
      for (const LabeledExpr& q : canonical_runtimes()) add(e, q.label, q.expr);
    }
  }
  return out;
}

}  // namespace qx
