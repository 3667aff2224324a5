#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qx/catalog.hpp"
#include "qx/errors.hpp"
#include "qx/hardware.hpp"
#include "qx/roadmap.hpp"

namespace qx::service {

// Request parameters, named as the CLI flags without dashes
// (classical, quantum, C, scenario, id, provider, years, ...).
using Params = std::map<std::string, std::string>;

class BadRequest : public Error {
 public:
  explicit BadRequest(const std::string& message) : Error("BadRequest", message) {}
};

// Read-only data shared by every request.
struct Context {
  std::filesystem::path data_dir;
  std::vector<HardwareScenario> scenarios;
  std::map<std::string, std::vector<RoadmapPoint>> roadmaps;  // by provider
  std::map<std::string, GrowthModel> models;
  std::vector<CatalogEntry> catalog;
};

// Flag, then $QX_DATA_DIR, then the in-repo default.
std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag);
// scenarios.json (built-ins when absent), roadmaps/*.csv, catalog.json.
Context load_context(const std::filesystem::path& data_dir);

nlohmann::json threshold_payload(const Context& ctx, const Params& p);
nlohmann::json grid_payload(const Context& ctx, const Params& p);
nlohmann::json analyze_payload(const Context& ctx, const Params& p);
nlohmann::json qaps_payload(const Context& ctx, const Params& p);
// action: fit | project | year-for
nlohmann::json roadmap_payload(const Context& ctx, const Params& p);
// action: list | classify
nlohmann::json catalog_payload(const Context& ctx, const Params& p);
// kind: crossover | wedge | roadmap
nlohmann::json plot_payload(const Context& ctx, const Params& p);

// Dispatch by endpoint name ("threshold", "grid", ...). Throws BadRequest for
// an unknown name.
nlohmann::json payload(const std::string& endpoint, const Context& ctx, const Params& p);

enum class Format { Text, MarkdownTable, Csv, Json, SvgPlotData };

Format format_from_string(const std::string& text);
std::string content_type(Format f);

// The one serialization used by both the CLI and the HTTP API.
std::string to_json_text(const nlohmann::json& payload);
std::string render_document(const std::string& endpoint, const nlohmann::json& payload, Format f);

struct ErrorReply {
  int status;
  nlohmann::json body;  // {error, kind, offset?}
};
ErrorReply error_reply(const std::exception& e);

}  // namespace qx::service
