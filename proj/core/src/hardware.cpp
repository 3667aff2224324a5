#include "qx/hardware.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qx/errors.hpp"

namespace qx {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
  });
}

HardwareScenario preset(std::string name, double c_speed, SpeedBasis basis) {
  HardwareScenario s;
  s.name = std::move(name);
  s.c_speed = c_speed;
  s.c_gate_overhead = 100.0;
  s.c_alg_constant = 1.0;
  s.ec_qubit_ratio = 1000.0;
  s.basis = basis;
  return s;
}

}  // namespace

std::string to_string(SpeedBasis basis) {
  return basis == SpeedBasis::Serial ? "serial" : "cost_parallel";
}

SpeedBasis speed_basis_from_string(std::string_view text) {
  if (text == "serial") return SpeedBasis::Serial;
  if (text == "cost_parallel") return SpeedBasis::CostParallel;
  throw ValidationError("basis must be 'serial' or 'cost_parallel', got '" + std::string(text) + "'");
}

void HardwareScenario::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(c_speed)) throw ValidationError(name + ": c_speed must be positive");
  if (!positive(c_gate_overhead)) throw ValidationError(name + ": c_gate_overhead must be positive");
  if (!positive(c_alg_constant)) throw ValidationError(name + ": c_alg_constant must be positive");
  if (!std::isfinite(ec_qubit_ratio) || ec_qubit_ratio < 1.0) {
    throw ValidationError(name + ": ec_qubit_ratio must be at least 1");
  }
}

LogMagnitude scenario_constant(const HardwareScenario& s) {
  return LogMagnitude::from_log10(std::log10(s.c_speed) + std::log10(s.c_gate_overhead) +
                                  std::log10(s.c_alg_constant));
}

const std::vector<HardwareScenario>& builtin_scenarios() {
  static const std::vector<HardwareScenario> presets = {
      preset("base", 1e4, SpeedBasis::Serial),
      preset("optimistic", 1e2, SpeedBasis::Serial),
      preset("pessimistic", 1e6, SpeedBasis::CostParallel),
      preset("appendix", 10.0, SpeedBasis::Serial),
      preset("serial", 2500.0, SpeedBasis::Serial),
      preset("cost", 1e6, SpeedBasis::CostParallel),
  };
  return presets;
}

const HardwareScenario& find_scenario(const std::vector<HardwareScenario>& scenarios, std::string_view name) {
  for (const HardwareScenario& s : scenarios) {
    if (iequals(s.name, name)) return s;
  }
  throw UnknownScenario(std::string(name));
}

std::vector<HardwareScenario> parse_scenarios(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_array()) throw SchemaError("scenario file must be a JSON array", 0);

  static const std::vector<std::string> kNumeric = {"c_speed", "c_gate_overhead", "c_alg_constant",
                                                    "ec_qubit_ratio"};
  std::vector<HardwareScenario> out;
  std::size_t row = 0;
  for (const nlohmann::json& item : doc) {
    ++row;
    if (!item.is_object()) throw SchemaError("scenario must be an object", row);
    for (const auto& [key, value] : item.items()) {
      bool known = key == "name" || key == "basis" || std::find(kNumeric.begin(), kNumeric.end(), key) != kNumeric.end();
      if (!known) throw SchemaError("unknown field '" + key + "'", row);
    }
    if (!item.contains("name") || !item["name"].is_string()) throw SchemaError("missing string field 'name'", row);

    HardwareScenario s;
    s.name = item["name"].get<std::string>();
    double* fields[] = {&s.c_speed, &s.c_gate_overhead, &s.c_alg_constant, &s.ec_qubit_ratio};
    for (std::size_t i = 0; i < kNumeric.size(); ++i) {
      if (!item.contains(kNumeric[i])) continue;
      if (!item[kNumeric[i]].is_number()) throw SchemaError("field '" + kNumeric[i] + "' must be a number", row);
      *fields[i] = item[kNumeric[i]].get<double>();
    }
    if (item.contains("basis")) {
      if (!item["basis"].is_string()) throw SchemaError("field 'basis' must be a string", row);
      try {
        s.basis = speed_basis_from_string(item["basis"].get<std::string>());
      } catch (const ValidationError& e) {
        throw SchemaError(e.what(), row);
      }
    }
    try {
      s.validate();
    } catch (const ValidationError& e) {
      throw SchemaError(e.what(), row);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<HardwareScenario> load_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string(), 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenarios(buffer.str());
}

LogMagnitude estimate_runtime(LogMagnitude ops, const HardwareScenario& s, Machine machine, double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ValidationError("rate must be positive");
  if (ops.is_zero()) return LogMagnitude::zero();
  double log_ops = ops.log10();
  if (machine == Machine::Quantum) log_ops += std::log10(s.c_gate_overhead);
  return LogMagnitude::from_log10(log_ops - std::log10(rate));
}

}  // namespace qx
