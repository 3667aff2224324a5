#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qx/crossover.hpp"
#include "qx/expr.hpp"
#include "qx/hardware.hpp"
#include "qx/log_magnitude.hpp"
#include "qx/roadmap.hpp"

namespace qx {

enum class SizeSemantics { Elements, Bits, VariablesLog2 };

std::string to_string(SizeSemantics s);
SizeSemantics size_semantics_from_string(std::string_view text);

struct AlgorithmPair {
  std::string id;
  std::string problem_name;
  Expr classical_runtime = Expr::var();
  Expr quantum_runtime = Expr::var();
  Expr qubit_requirement = Expr::var();  // logical qubits as a function of n
  std::optional<Expr> data_loading;
  SizeSemantics size_semantics = SizeSemantics::Elements;
  std::string citation;
};

struct EffectiveRuntime {
  Expr runtime = Expr::var();
  bool loading_bound_applied = false;
};

// The asymptotically larger of the quantum runtime and the data-loading cost.
EffectiveRuntime effective_quantum_runtime(const AlgorithmPair& pair);

// Closed interval of problem sizes; `upper` is absent when the hardware
// bound exceeds every representable size.
struct SizeInterval {
  ProblemSize lower;
  std::optional<ProblemSize> upper;
};

struct QapsPoint {
  double year = 0.0;
  std::optional<SizeInterval> interval;  // empty when nothing is both fast and feasible
};

struct AdvantageReport {
  Threshold threshold = Threshold::no_advantage();
  LogMagnitude c;
  bool loading_bound_applied = false;
  Expr effective_quantum = Expr::var();
  // Present only for a finite threshold.
  std::optional<LogMagnitude> logical_qubits_at_threshold;
  std::optional<LogMagnitude> physical_qubits_at_threshold;
  std::optional<double> first_advantage_year;
  std::vector<QapsPoint> qaps_by_year;
};

// Solves the threshold against the effective quantum runtime and joins it
// with the qubit roadmap. Logical qubits at the threshold are the ceiling of
// the requirement. Throws ValidationError on an empty or unsorted `years`.
AdvantageReport analyze(const AlgorithmPair& pair, const HardwareScenario& scenario, const GrowthModel& model,
                        const std::vector<double>& years);

// Problem sizes at or above the threshold whose qubit requirement fits in
// the whole logical qubits available that year. Empty for NoAdvantage.
// Throws NonMonotoneQubitRequirement if sampling finds the requirement
// decreasing.
std::optional<SizeInterval> qaps(const AlgorithmPair& pair, const HardwareScenario& scenario,
                                 const GrowthModel& model, double year);
std::optional<SizeInterval> qaps(const AlgorithmPair& pair, const Threshold& threshold,
                                 const HardwareScenario& scenario, const GrowthModel& model, double year);

// Largest n with requirement(n) <= capacity. `fits_any` is false when even
// n = 2 needs more; `max_size` is absent when no size is out of reach.
struct CapacityBound {
  bool fits_any = false;
  std::optional<ProblemSize> max_size;
};
CapacityBound max_size_for_qubits(const Expr& requirement, LogMagnitude capacity);

void check_monotone_requirement(const Expr& requirement);

struct SizeConversion {
  ProblemSize size;
  std::optional<LogMagnitude> value;  // 2^n for bit-length sizes
};

// elements: unchanged; variables_log2: ceil(log2 n); bits: n with 2^n.
SizeConversion convert_size_semantics(const ProblemSize& n, SizeSemantics semantics);

// "2026.9" and "2026-2027".
std::string format_year(double year);
std::string format_year_range(double year);

}  // namespace qx
