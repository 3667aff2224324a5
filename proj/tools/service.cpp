#include "service.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "qx/advantage.hpp"
#include "qx/crossover.hpp"
#include "qx/csv.hpp"
#include "qx/expr.hpp"
#include "qx/rational.hpp"

#ifndef QX_DEFAULT_DATA_DIR
#define QX_DEFAULT_DATA_DIR "data"
#endif

namespace qx::service {

using nlohmann::json;

namespace {

// A parse error in a named request parameter.
class ParamParseError : public ParseError {
 public:
  ParamParseError(const ParseError& inner, std::string param) : ParseError(inner), param_(std::move(param)) {}
  const std::string& param() const noexcept { return param_; }

 private:
  std::string param_;
};

std::optional<std::string> get(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

std::string require(const Params& p, const std::string& key) {
  auto v = get(p, key);
  if (!v) throw BadRequest("missing parameter '" + key + "'");
  return *v;
}

Expr parse_param(const Params& p, const std::string& key) {
  std::string text = require(p, key);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParamParseError(e, key);
  }
}

double parse_number(const std::string& text, const std::string& key) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
    throw BadRequest("parameter '" + key + "' must be a number, got '" + text + "'");
  }
  return v;
}

// "1e6", "2.5e5", "1000000" or "10^6".
double parse_log10_quantity(const std::string& text, const std::string& key) {
  if (text.rfind("10^", 0) == 0) return parse_number(text.substr(3), key);
  try {
    Rational r = Rational::parse_decimal(text);
    if (!r.is_positive()) throw BadRequest("parameter '" + key + "' must be positive");
    return r.log10();
  } catch (const std::invalid_argument&) {
    throw BadRequest("parameter '" + key + "' must be a number like 1e6 or 10^6, got '" + text + "'");
  } catch (const std::overflow_error&) {
    throw BadRequest("parameter '" + key + "' is out of range; use the 10^k form");
  }
}

// Rounded to 12 significant digits so payloads do not carry float noise.
json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

json size_json(const ProblemSize& n) {
  json j;
  j["display"] = display(n);
  j["log10"] = num(n.log10());
  j["exact"] = n.is_exact() ? json(n.exact_value()) : json(nullptr);
  return j;
}

json quantity_json(LogMagnitude m) {
  json j;
  j["log10"] = num(m.log10());
  j["value"] = m.log10() < LogMagnitude::kExactLimitLog10 ? num(m.value()) : json(nullptr);
  return j;
}

struct ScenarioChoice {
  HardwareScenario scenario;
  LogMagnitude c;
};

ScenarioChoice scenario_from(const Context& ctx, const Params& p) {
  auto name = get(p, "scenario");
  HardwareScenario s = find_scenario(ctx.scenarios, name.value_or("base"));
  if (auto c = get(p, "C")) {
    double log_c = parse_log10_quantity(*c, "C");
    s.name = "custom";
    s.c_speed = std::pow(10.0, log_c);
    s.c_gate_overhead = 1.0;
    s.c_alg_constant = 1.0;
    if (!std::isfinite(s.c_speed)) throw BadRequest("parameter 'C' is out of range");
    if (auto r = get(p, "ec_ratio")) s.ec_qubit_ratio = parse_number(*r, "ec_ratio");
    s.validate();
    return {s, LogMagnitude::from_log10(log_c)};
  }
  if (auto r = get(p, "ec_ratio")) s.ec_qubit_ratio = parse_number(*r, "ec_ratio");
  s.validate();
  return {s, scenario_constant(s)};
}

const GrowthModel& model_from(const Context& ctx, const Params& p) {
  std::string provider = get(p, "provider").value_or("ibm");
  auto it = ctx.models.find(provider);
  if (it == ctx.models.end()) throw UnknownProvider(provider);
  return it->second;
}

// "2024,2027,2030" or "2024:2035" or "2024:2035:0.5".
std::vector<double> years_from(const Params& p, const std::string& fallback) {
  std::string text = get(p, "years").value_or(get(p, "year").value_or(fallback));
  std::vector<double> years;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) throw BadRequest("years range must be start:end[:step]");
    double a = parse_number(parts[0], "years");
    double b = parse_number(parts[1], "years");
    double step = parts.size() == 3 ? parse_number(parts[2], "years") : 1.0;
    if (!(step > 0) || b < a) throw BadRequest("years range must ascend with a positive step");
    if ((b - a) / step > 1000) throw BadRequest("years range has more than 1000 points");
    for (int i = 0; a + i * step <= b + 1e-9; ++i) years.push_back(a + i * step);
  } else {
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ',');) years.push_back(parse_number(part, "years"));
  }
  if (years.empty()) throw BadRequest("no years given");
  if (!std::is_sorted(years.begin(), years.end())) throw BadRequest("years must ascend");
  return years;
}

AlgorithmPair pair_from(const Context& ctx, const Params& p) {
  AlgorithmPair pair;
  if (auto id = get(p, "id")) {
    const CatalogEntry& e = find_entry(ctx.catalog, *id);
    if (!e.has_quantum_pair()) throw BadRequest("entry '" + *id + "' has no quantum algorithm");
    pair = e.pair();
  } else {
    pair.id = "custom";
    pair.problem_name = "custom";
    pair.classical_runtime = parse_param(p, "classical");
    pair.quantum_runtime = parse_param(p, "quantum");
    pair.qubit_requirement = get(p, "qubits") ? parse_param(p, "qubits") : parse("log(n) / log(2)");
    if (auto s = get(p, "semantics")) {
      try {
        pair.size_semantics = size_semantics_from_string(*s);
      } catch (const ValidationError& e) {
        throw BadRequest(e.what());
      }
    }
  }
  if (get(p, "loading")) pair.data_loading = parse_param(p, "loading");
  return pair;
}

json threshold_fields(const Threshold& t) {
  json j;
  j["threshold"] = display(t);
  j["log10_root"] = t.is_finite() ? num(t.root_log10()) : json(nullptr);
  j["light"] = to_string(classify(t));
  return j;
}

json qaps_json(const QapsPoint& q) {
  json j;
  j["year"] = num(q.year);
  j["empty"] = !q.interval.has_value();
  j["lower"] = q.interval ? size_json(q.interval->lower) : json(nullptr);
  j["upper"] = q.interval && q.interval->upper ? size_json(*q.interval->upper) : json(nullptr);
  j["unbounded"] = q.interval && !q.interval->upper;
  return j;
}

json model_json(const GrowthModel& m) {
  json j;
  j["provider"] = m.provider;
  j["reference_year"] = num(m.reference_year);
  j["intercept"] = num(m.intercept);
  j["slope"] = num(m.slope);
  j["r_squared"] = m.r_squared ? num(*m.r_squared) : json(nullptr);
  j["points"] = m.points;
  return j;
}

json series(const std::string& name, const std::vector<std::pair<double, double>>& pts) {
  json points = json::array();
  for (auto [x, y] : pts) points.push_back(json::array({num(x), num(y)}));
  return {{"name", name}, {"points", points}};
}

}  // namespace

std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("QX_DATA_DIR"); env && *env) return env;
  return QX_DEFAULT_DATA_DIR;
}

Context load_context(const std::filesystem::path& data_dir) {
  namespace fs = std::filesystem;
  Context ctx;
  ctx.data_dir = data_dir;
  if (!fs::is_directory(data_dir)) throw ValidationError("data directory not found: " + data_dir.string());

  fs::path scenarios = data_dir / "scenarios.json";
  ctx.scenarios = fs::exists(scenarios) ? load_scenarios(scenarios) : builtin_scenarios();

  fs::path roadmaps = data_dir / "roadmaps";
  if (fs::is_directory(roadmaps)) {
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator(roadmaps)) {
      if (f.path().extension() == ".csv") files.push_back(f.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
      std::string provider = f.stem().string();
      ctx.roadmaps[provider] = load_roadmap(f);
      ctx.models[provider] = fit_growth(ctx.roadmaps[provider]);
    }
  }

  fs::path catalog = data_dir / "catalog.json";
  if (fs::exists(catalog)) ctx.catalog = load_catalog(catalog);
  return ctx;
}

json threshold_payload(const Context& ctx, const Params& p) {
  Expr f = parse_param(p, "classical");
  Expr g = parse_param(p, "quantum");
  ScenarioChoice sc = scenario_from(ctx, p);
  Threshold t = solve_threshold(f, g, sc.c);

  json j = threshold_fields(t);
  j["classical"] = render(f);
  j["quantum"] = render(g);
  j["scenario"] = sc.scenario.name;
  j["log10_C"] = num(sc.c.log10());
  j["advantage"] = t.is_finite();
  j["n_star"] = t.is_finite() ? size_json(t.size()) : json(nullptr);
  return j;
}

json grid_payload(const Context& ctx, const Params& p) {
  ScenarioChoice sc = scenario_from(ctx, p);
  const auto& runtimes = canonical_runtimes();
  ThresholdGrid grid = threshold_grid(runtimes, runtimes, sc.c);

  json labels = json::array();
  for (const LabeledExpr& r : runtimes) labels.push_back(r.label);
  json rows = json::array();
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < grid.cells[i].size(); ++k) {
      json cell = threshold_fields(grid.cells[i][k].threshold);
      cell["classical"] = runtimes[i].label;
      cell["quantum"] = runtimes[k].label;
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return {{"scenario", sc.scenario.name}, {"log10_C", num(sc.c.log10())}, {"classical", labels},
          {"quantum", labels},           {"cells", rows}};
}

json analyze_payload(const Context& ctx, const Params& p) {
  AlgorithmPair pair = pair_from(ctx, p);
  ScenarioChoice sc = scenario_from(ctx, p);
  const GrowthModel& model = model_from(ctx, p);
  std::vector<double> years = years_from(p, "2024:2035");
  AdvantageReport r = analyze(pair, sc.scenario, model, years);

  json j = threshold_fields(r.threshold);
  j["id"] = pair.id;
  j["problem_name"] = pair.problem_name;
  j["classical"] = render(pair.classical_runtime);
  j["quantum"] = render(pair.quantum_runtime);
  j["effective_quantum"] = render(r.effective_quantum);
  j["qubit_requirement"] = render(pair.qubit_requirement);
  j["data_loading"] = pair.data_loading ? json(render(*pair.data_loading)) : json(nullptr);
  j["loading_bound_applied"] = r.loading_bound_applied;
  j["scenario"] = sc.scenario.name;
  j["log10_C"] = num(r.c.log10());
  j["ec_qubit_ratio"] = num(sc.scenario.ec_qubit_ratio);
  j["provider"] = model.provider;
  j["advantage"] = r.threshold.is_finite();
  j["n_star"] = r.threshold.is_finite() ? size_json(r.threshold.size()) : json(nullptr);
  j["size_semantics"] = to_string(pair.size_semantics);
  if (r.threshold.is_finite()) {
    SizeConversion conv = convert_size_semantics(r.threshold.size(), pair.size_semantics);
    j["converted_size"] = {{"size", size_json(conv.size)},
                           {"value_log10", conv.value ? num(conv.value->log10()) : json(nullptr)}};
  } else {
    j["converted_size"] = nullptr;
  }
  j["logical_qubits"] = r.logical_qubits_at_threshold ? quantity_json(*r.logical_qubits_at_threshold) : json(nullptr);
  j["physical_qubits"] =
      r.physical_qubits_at_threshold ? quantity_json(*r.physical_qubits_at_threshold) : json(nullptr);
  if (r.first_advantage_year) {
    j["first_advantage_year"] = num(std::round(*r.first_advantage_year * 10) / 10);
    j["first_advantage_year_exact"] = num(*r.first_advantage_year);
    j["first_advantage_range"] = format_year_range(*r.first_advantage_year);
  } else {
    j["first_advantage_year"] = nullptr;
    j["first_advantage_year_exact"] = nullptr;
    j["first_advantage_range"] = nullptr;
  }
  json q = json::array();
  for (const QapsPoint& point : r.qaps_by_year) q.push_back(qaps_json(point));
  j["qaps"] = q;
  return j;
}

json qaps_payload(const Context& ctx, const Params& p) {
  AlgorithmPair pair = pair_from(ctx, p);
  ScenarioChoice sc = scenario_from(ctx, p);
  const GrowthModel& model = model_from(ctx, p);
  std::vector<double> years = years_from(p, "2024:2035");
  Threshold t = solve_threshold(pair.classical_runtime, effective_quantum_runtime(pair).runtime, sc.c);

  json j = threshold_fields(t);
  j["id"] = pair.id;
  j["scenario"] = sc.scenario.name;
  j["log10_C"] = num(sc.c.log10());
  j["provider"] = model.provider;
  json q = json::array();
  for (double y : years) q.push_back(qaps_json({y, qaps(pair, t, sc.scenario, model, y)}));
  j["qaps"] = q;
  return j;
}

json roadmap_payload(const Context& ctx, const Params& p) {
  const GrowthModel& model = model_from(ctx, p);
  std::string action = get(p, "action").value_or("fit");
  json j;
  j["provider"] = model.provider;
  j["action"] = action;
  j["model"] = model_json(model);
  if (action == "fit") {
    json pts = json::array();
    for (const RoadmapPoint& pt : ctx.roadmaps.at(get(p, "provider").value_or("ibm"))) {
      pts.push_back({{"year", num(pt.year)}, {"physical_qubits", pt.physical_qubits}, {"status", to_string(pt.status)}});
    }
    j["points"] = pts;
  } else if (action == "project") {
    double year = parse_number(require(p, "year"), "year");
    double ratio = get(p, "ec_ratio") ? parse_number(*get(p, "ec_ratio"), "ec_ratio") : 1000.0;
    j["year"] = num(year);
    j["physical_qubits"] = quantity_json(project_qubits(model, year));
    j["ec_qubit_ratio"] = num(ratio);
    j["logical_qubits"] = quantity_json(logical_qubits_available(model, year, ratio));
  } else if (action == "year-for") {
    LogMagnitude q = LogMagnitude::from_log10(parse_log10_quantity(require(p, "qubits"), "qubits"));
    double year = year_for_qubits(model, q);
    j["qubits_log10"] = num(q.log10());
    j["year"] = num(year);
    j["year_display"] = format_year(year);
    j["year_range"] = format_year_range(year);
  } else {
    throw BadRequest("roadmap action must be fit, project or year-for");
  }
  return j;
}

json catalog_payload(const Context& ctx, const Params& p) {
  std::string action = get(p, "action").value_or("list");
  if (action == "list") {
    auto tag = get(p, "tag");
    bool quantum_only = get(p, "quantum_only").value_or("false") == "true";
    json entries = json::array();
    for (const CatalogEntry& e : ctx.catalog) {
      if (tag && std::find(e.tags.begin(), e.tags.end(), *tag) == e.tags.end()) continue;
      if (quantum_only && !e.has_quantum_pair()) continue;
      entries.push_back({{"id", e.id},
                         {"problem_name", e.problem_name},
                         {"classical_runtime", e.classical_text},
                         {"runtime_class_label", e.runtime_class_label},
                         {"quantum_runtime", e.quantum_text ? json(*e.quantum_text) : json(nullptr)},
                         {"qubit_requirement", e.qubit_text ? json(*e.qubit_text) : json(nullptr)},
                         {"size_semantics", to_string(e.size_semantics)},
                         {"tags", e.tags},
                         {"citation", e.citation}});
    }
    return {{"action", action}, {"count", entries.size()}, {"entries", entries}};
  }
  if (action == "classify") {
    ScenarioChoice sc = scenario_from(ctx, p);
    bool canonical = get(p, "canonical").value_or("false") == "true";
    json results = json::array();
    for (const ClassifiedEntry& c : classify_catalog(ctx.catalog, sc.scenario, canonical)) {
      json r;
      r["id"] = c.entry->id;
      r["problem_name"] = c.entry->problem_name;
      r["quantum"] = c.quantum_label;
      if (c.threshold) {
        r["threshold"] = display(*c.threshold);
        r["log10_root"] = c.threshold->is_finite() ? num(c.threshold->root_log10()) : json(nullptr);
      } else {
        r["threshold"] = "beyond-range";
        r["log10_root"] = nullptr;
      }
      r["light"] = to_string(c.light);
      results.push_back(r);
    }
    return {{"action", action},
            {"scenario", sc.scenario.name},
            {"log10_C", num(sc.c.log10())},
            {"count", results.size()},
            {"results", results}};
  }
  throw BadRequest("catalog action must be list or classify");
}

json plot_payload(const Context& ctx, const Params& p) {
  std::string kind = get(p, "kind").value_or("crossover");
  if (kind == "crossover") {
    AlgorithmPair pair = pair_from(ctx, p);
    ScenarioChoice sc = scenario_from(ctx, p);
    Expr g = effective_quantum_runtime(pair).runtime;
    Threshold t = solve_threshold(pair.classical_runtime, g, sc.c);
    const double lo = std::log10(2.0);
    double hi = t.is_finite() ? std::max(2 * t.root_log10(), t.root_log10() + 2) : 12.0;
    constexpr int kSamples = 121;
    std::vector<std::pair<double, double>> fc;
    std::vector<std::pair<double, double>> gc;
    for (int i = 0; i < kSamples; ++i) {
      double x = lo + (hi - lo) * i / (kSamples - 1);
      fc.emplace_back(x, eval_log10(pair.classical_runtime, x).log10());
      gc.emplace_back(x, eval_log10(g, x).log10() + sc.c.log10());
    }
    json j = threshold_fields(t);
    j["kind"] = kind;
    j["x_label"] = "log10 n";
    j["y_label"] = "log10 operations";
    j["marker_log10"] = t.is_finite() ? num(t.root_log10()) : json(nullptr);
    j["series"] = json::array({series("classical", fc), series("quantum_scaled", gc)});
    return j;
  }
  if (kind == "wedge") {
    AlgorithmPair pair = pair_from(ctx, p);
    ScenarioChoice sc = scenario_from(ctx, p);
    const GrowthModel& model = model_from(ctx, p);
    std::vector<double> years = years_from(p, "2024:2040");
    Threshold t = solve_threshold(pair.classical_runtime, effective_quantum_runtime(pair).runtime, sc.c);
    std::vector<std::pair<double, double>> lower;
    std::vector<std::pair<double, double>> upper;
    for (double y : years) {
      auto q = qaps(pair, t, sc.scenario, model, y);
      if (!q || !q->upper) continue;
      lower.emplace_back(y, q->lower.log10());
      upper.emplace_back(y, q->upper->log10());
    }
    std::vector<std::pair<double, double>> polygon = lower;
    polygon.insert(polygon.end(), upper.rbegin(), upper.rend());
    json j = threshold_fields(t);
    j["kind"] = kind;
    j["x_label"] = "year";
    j["y_label"] = "log10 n";
    j["series"] = json::array({series("lower", lower), series("upper", upper), series("polygon", polygon)});
    return j;
  }
  if (kind == "roadmap") {
    const GrowthModel& model = model_from(ctx, p);
    std::vector<double> years = years_from(p, std::to_string(static_cast<int>(model.reference_year)) + ":2040");
    json all = json::array();
    std::map<std::string, std::vector<std::pair<double, double>>> by_status;
    for (const RoadmapPoint& pt : ctx.roadmaps.at(get(p, "provider").value_or("ibm"))) {
      by_status[to_string(pt.status)].emplace_back(pt.year, std::log10(static_cast<double>(pt.physical_qubits)));
    }
    for (const auto& [status, pts] : by_status) all.push_back(series(status, pts));
    std::vector<std::pair<double, double>> fit;
    for (double y : years) fit.emplace_back(y, project_qubits(model, y).log10());
    all.push_back(series("fit", fit));
    return {{"kind", kind},          {"provider", model.provider}, {"x_label", "year"},
            {"y_label", "log10 physical qubits"}, {"model", model_json(model)}, {"series", all}};
  }
  throw BadRequest("plot kind must be crossover, wedge or roadmap");
}

json payload(const std::string& endpoint, const Context& ctx, const Params& p) {
  if (endpoint == "threshold") return threshold_payload(ctx, p);
  if (endpoint == "grid") return grid_payload(ctx, p);
  if (endpoint == "analyze") return analyze_payload(ctx, p);
  if (endpoint == "qaps") return qaps_payload(ctx, p);
  if (endpoint == "roadmap") return roadmap_payload(ctx, p);
  if (endpoint == "catalog") return catalog_payload(ctx, p);
  if (endpoint == "plot") return plot_payload(ctx, p);
  throw BadRequest("unknown endpoint '" + endpoint + "'");
}

Format format_from_string(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "markdown-table" || text == "markdown") return Format::MarkdownTable;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "svg-plot-data" || text == "svg") return Format::SvgPlotData;
  throw BadRequest("format must be text, markdown-table, csv, json or svg-plot-data");
}

std::string content_type(Format f) {
  switch (f) {
    case Format::Json:
      return "application/json";
    case Format::Csv:
      return "text/csv";
    case Format::SvgPlotData:
      return "image/svg+xml";
    case Format::MarkdownTable:
      return "text/markdown";
    case Format::Text:
      return "text/plain";
  }
  return "text/plain";
}

std::string to_json_text(const json& payload) { return payload.dump(2) + "\n"; }

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string cell_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return fmt6(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::string size_text(const json& s) { return s.is_null() ? "" : s["display"].get<std::string>(); }

Table key_values(const json& payload, const std::vector<std::string>& keys) {
  Table t{{"field", "value"}, {}};
  for (const std::string& k : keys) {
    if (!payload.contains(k)) continue;
    const json& v = payload[k];
    if (v.is_object() && v.contains("display")) {
      t.rows.push_back({k, size_text(v)});
    } else if (v.is_object() && v.contains("log10") && v.contains("value")) {
      t.rows.push_back({k, v["value"].is_null() ? "10^" + cell_text(v["log10"]) : cell_text(v["value"])});
    } else {
      t.rows.push_back({k, cell_text(v)});
    }
  }
  return t;
}

Table qaps_table(const json& payload) {
  Table t{{"year", "qaps_lower", "qaps_upper"}, {}};
  for (const json& q : payload["qaps"]) {
    std::string lower = q["empty"].get<bool>() ? "empty" : size_text(q["lower"]);
    std::string upper = q["unbounded"].get<bool>() ? "unbounded" : size_text(q["upper"]);
    t.rows.push_back({cell_text(q["year"]), lower, upper});
  }
  return t;
}

Table series_table(const json& payload) {
  Table t;
  t.header = {"series", payload["x_label"].get<std::string>(), payload["y_label"].get<std::string>()};
  for (const json& s : payload["series"]) {
    for (const json& pt : s["points"]) t.rows.push_back({s["name"].get<std::string>(), cell_text(pt[0]), cell_text(pt[1])});
  }
  return t;
}

std::vector<Table> tables_for(const std::string& endpoint, const json& payload) {
  if (endpoint == "threshold") {
    return {{{"classical", "quantum", "log10_C", "threshold", "log10_root", "light"},
             {{cell_text(payload["classical"]), cell_text(payload["quantum"]), cell_text(payload["log10_C"]),
               cell_text(payload["threshold"]), cell_text(payload["log10_root"]), cell_text(payload["light"])}}}};
  }
  if (endpoint == "grid") {
    Table t;
    t.header.push_back("classical \\ quantum");
    for (const json& q : payload["quantum"]) t.header.push_back(q.get<std::string>());
    for (std::size_t i = 0; i < payload["cells"].size(); ++i) {
      std::vector<std::string> row{payload["classical"][i].get<std::string>()};
      for (const json& c : payload["cells"][i]) {
        row.push_back(c["threshold"].get<std::string>() + " (" + c["light"].get<std::string>() + ")");
      }
      t.rows.push_back(row);
    }
    return {t};
  }
  if (endpoint == "analyze") {
    return {key_values(payload, {"id", "problem_name", "classical", "quantum", "effective_quantum",
                                 "qubit_requirement", "loading_bound_applied", "scenario", "log10_C", "provider",
                                 "threshold", "log10_root", "light", "logical_qubits", "physical_qubits",
                                 "first_advantage_year", "first_advantage_range"}),
            qaps_table(payload)};
  }
  if (endpoint == "qaps") {
    return {key_values(payload, {"id", "scenario", "provider", "threshold", "light"}), qaps_table(payload)};
  }
  if (endpoint == "roadmap") {
    Table model = key_values(payload["model"], {"provider", "reference_year", "intercept", "slope", "r_squared", "points"});
    if (payload["action"] == "fit") {
      Table pts{{"year", "physical_qubits", "status"}, {}};
      for (const json& pt : payload["points"]) {
        pts.rows.push_back({cell_text(pt["year"]), std::to_string(pt["physical_qubits"].get<std::uint64_t>()),
                            pt["status"].get<std::string>()});
      }
      return {model, pts};
    }
    return {model, key_values(payload, {"year", "physical_qubits", "logical_qubits", "qubits_log10", "year_display",
                                        "year_range"})};
  }
  if (endpoint == "catalog") {
    if (payload["action"] == "list") {
      Table t{{"id", "problem_name", "runtime_class_label", "quantum_runtime"}, {}};
      for (const json& e : payload["entries"]) {
        t.rows.push_back({cell_text(e["id"]), cell_text(e["problem_name"]), cell_text(e["runtime_class_label"]),
                          cell_text(e["quantum_runtime"])});
      }
      return {t};
    }
    Table t{{"id", "quantum", "threshold", "log10_root", "light"}, {}};
    for (const json& r : payload["results"]) {
      t.rows.push_back({cell_text(r["id"]), cell_text(r["quantum"]), cell_text(r["threshold"]),
                        cell_text(r["log10_root"]), cell_text(r["light"])});
    }
    return {t};
  }
  if (endpoint == "plot") return {series_table(payload)};
  throw BadRequest("unknown endpoint '" + endpoint + "'");
}

std::string markdown(const Table& t) {
  auto esc = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '|') out += '\\';
      out += c;
    }
    return out;
  };
  std::string out = "|";
  for (const std::string& h : t.header) out += " " + esc(h) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : t.rows) {
    out += "|";
    for (const std::string& c : row) out += " " + esc(c) + " |";
    out += "\n";
  }
  return out;
}

std::string csv_text(const Table& t) {
  std::string out = csv::join_record(t.header) + "\r\n";
  for (const auto& row : t.rows) out += csv::join_record(row) + "\r\n";
  return out;
}

std::string svg_text(const json& payload) {
  constexpr double kW = 640;
  constexpr double kH = 400;
  constexpr double kPad = 40;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const json& s : payload["series"]) {
    for (const json& pt : s["points"]) {
      if (pt[0].is_null() || pt[1].is_null()) continue;
      double x = pt[0].get<double>();
      double y = pt[1].get<double>();
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  auto sx = [&](double x) { return kPad + (x - x0) / (x1 - x0) * (kW - 2 * kPad); };
  auto sy = [&](double y) { return kH - kPad - (y - y0) / (y1 - y0) * (kH - 2 * kPad); };

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" data-x-min=\""
      << fmt6(x0) << "\" data-x-max=\"" << fmt6(x1) << "\" data-y-min=\"" << fmt6(y0) << "\" data-y-max=\"" << fmt6(y1)
      << "\">\n";
  out << "  <text x=\"" << kW / 2 << "\" y=\"" << kH - 8 << "\" text-anchor=\"middle\">"
      << payload["x_label"].get<std::string>() << "</text>\n";
  out << "  <text x=\"12\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 12 " << kH / 2
      << ")\" text-anchor=\"middle\">" << payload["y_label"].get<std::string>() << "</text>\n";
  std::size_t color = 0;
  for (const json& s : payload["series"]) {
    std::string name = s["name"].get<std::string>();
    out << "  <polyline data-series=\"" << name << "\" fill=\"" << (name == "polygon" ? "#2ca02c33" : "none")
        << "\" stroke=\"" << kColors[color++ % 5] << "\" points=\"";
    bool first = true;
    for (const json& pt : s["points"]) {
      if (pt[0].is_null() || pt[1].is_null()) continue;
      if (!first) out << ' ';
      out << fmt6(sx(pt[0].get<double>())) << ',' << fmt6(sy(pt[1].get<double>()));
      first = false;
    }
    out << "\"/>\n";
  }
  if (payload.contains("marker_log10") && !payload["marker_log10"].is_null()) {
    double x = sx(payload["marker_log10"].get<double>());
    out << "  <line data-marker=\"" << fmt6(payload["marker_log10"].get<double>()) << "\" x1=\"" << fmt6(x)
        << "\" x2=\"" << fmt6(x) << "\" y1=\"" << kPad << "\" y2=\"" << kH - kPad
        << "\" stroke=\"#444\" stroke-dasharray=\"4 4\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_document(const std::string& endpoint, const json& payload, Format f) {
  switch (f) {
    case Format::Json:
      return to_json_text(payload);
    case Format::SvgPlotData:
      if (endpoint != "plot") throw BadRequest("svg-plot-data is only available for plots");
      return svg_text(payload);
    case Format::Text:
      if (endpoint == "threshold") {
        std::string out = payload["threshold"].get<std::string>() + "\n";
        if (!payload["log10_root"].is_null()) out += "log10 root: " + fmt6(payload["log10_root"].get<double>()) + "\n";
        return out;
      }
      [[fallthrough]];
    case Format::MarkdownTable: {
      std::string out;
      for (const Table& t : tables_for(endpoint, payload)) {
        if (!out.empty()) out += "\n";
        out += markdown(t);
      }
      return out;
    }
    case Format::Csv: {
      std::string out;
      for (const Table& t : tables_for(endpoint, payload)) {
        if (!out.empty()) out += "\r\n";
        out += csv_text(t);
      }
      return out;
    }
  }
  return {};
}

ErrorReply error_reply(const std::exception& e) {
  json body;
  body["error"] = e.what();
  int status = 500;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    body["kind"] = err->kind();
    const std::string& k = err->kind();
    if (k == "UnknownEntry" || k == "UnknownProvider" || k == "UnknownScenario") {
      status = 404;
    } else if (k == "SolverError" || k == "Inconclusive") {
      status = 422;
    } else {
      status = 400;
    }
  } else {
    body["kind"] = "InternalError";
  }
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) body["offset"] = pe->offset();
  if (const auto* pp = dynamic_cast<const ParamParseError*>(&e)) body["param"] = pp->param();
  return {status, body};
}

}  // namespace qx::service
