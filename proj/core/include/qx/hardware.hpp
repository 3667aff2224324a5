#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qx/log_magnitude.hpp"

namespace qx {

enum class SpeedBasis { Serial, CostParallel };

std::string to_string(SpeedBasis basis);
SpeedBasis speed_basis_from_string(std::string_view text);

// Classical-vs-quantum performance gap. The overhead constant is
// C = c_speed * c_gate_overhead * c_alg_constant.
struct HardwareScenario {
  std::string name;
  double c_speed = 1.0;          // classical ops per quantum gate op
  double c_gate_overhead = 1.0;  // physical gates per logical gate
  double c_alg_constant = 1.0;   // K_classical / K_quantum
  double ec_qubit_ratio = 1.0;   // physical qubits per logical qubit
  SpeedBasis basis = SpeedBasis::Serial;

  // Throws ValidationError when a factor is not positive or the EC ratio
  // is below 1.
  void validate() const;
};

LogMagnitude scenario_constant(const HardwareScenario& s);

// base (10^6), optimistic (10^4), pessimistic (10^8), appendix (10^3),
// serial (2.5 x 10^5) and cost (10^8); EC ratio 1000 throughout.
const std::vector<HardwareScenario>& builtin_scenarios();

// Looks up by name (case-insensitive). Throws UnknownScenario.
const HardwareScenario& find_scenario(const std::vector<HardwareScenario>& scenarios, std::string_view name);

// Scenario presets file: a JSON array of objects with exactly the
// HardwareScenario field names; `basis` is "serial" or "cost_parallel".
// Unknown fields are rejected with a SchemaError.
std::vector<HardwareScenario> load_scenarios(const std::filesystem::path& path);
std::vector<HardwareScenario> parse_scenarios(std::string_view json_text);

// Default machine rates.
struct MachineRates {
  static constexpr double kQuantumGateOpsPerSecond = 2e6;   // 2 MHz
  static constexpr double kClassicalOpsPerSecond = 5e9;     // 5 GHz
  static constexpr double kClassicalOpsPerDollar = 1e14;
  static constexpr double kQuantumGateOpsPerDollar = 1e8;
};

enum class Machine { Classical, Quantum };

// Wall time in the time unit of `rate` (ops per unit). Quantum logical ops
// are inflated by the scenario's gate overhead. Throws ValidationError if
// rate <= 0.
LogMagnitude estimate_runtime(LogMagnitude ops, const HardwareScenario& s, Machine machine, double rate);

}  // namespace qx
