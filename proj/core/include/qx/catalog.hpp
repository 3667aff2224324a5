#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qx/advantage.hpp"
#include "qx/crossover.hpp"
#include "qx/hardware.hpp"

namespace qx {

// One problem row. Entries with a quantum runtime (and qubit requirement)
// form an AlgorithmPair; the rest carry only the classical side.
struct CatalogEntry {
  std::string id;
  std::string problem_name;
  Expr classical_runtime = Expr::var();
  std::optional<Expr> quantum_runtime;
  std::optional<Expr> qubit_requirement;
  std::optional<Expr> data_loading;
  SizeSemantics size_semantics = SizeSemantics::Elements;
  std::string runtime_class_label;
  std::vector<std::string> tags;
  std::string citation;

  // Expression texts exactly as read, so saving reproduces the input.
  std::string classical_text;
  std::optional<std::string> quantum_text;
  std::optional<std::string> qubit_text;
  std::optional<std::string> loading_text;

  bool has_quantum_pair() const noexcept { return quantum_runtime.has_value(); }
  // Throws std::logic_error without a quantum pair.
  AlgorithmPair pair() const;
};

// JSON array of objects with fields id, problem_name, classical_runtime,
// quantum_runtime?, qubit_requirement?, data_loading?, size_semantics,
// runtime_class_label, tags, citation. A blank file is an empty catalog.
// Throws SchemaError (row) or ExpressionError (row, offset); rows are 1-based.
std::vector<CatalogEntry> parse_catalog(std::string_view json_text);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

// Canonical form: two-space indent, sorted keys, trailing newline.
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);
void save_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& path);

// Throws UnknownEntry.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view id);

struct ClassifiedEntry {
  const CatalogEntry* entry = nullptr;
  std::string quantum_label;  // "pair" for the entry's own quantum runtime
  // Absent when the crossing lies beyond the solver's search range; such
  // pairs still have an advantage and classify as Yellow.
  std::optional<Threshold> threshold;
  TrafficLight light = TrafficLight::Red;
};

// Entries with a quantum pair are classified against their effective quantum
// runtime. With `canonical_quantum`, entries without one are classified
// against each canonical quantum runtime instead of being skipped.
std::vector<ClassifiedEntry> classify_catalog(const std::vector<CatalogEntry>& entries,
                                              const HardwareScenario& scenario, bool canonical_quantum = false);

}  // namespace qx
