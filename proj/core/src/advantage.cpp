#include "qx/advantage.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qx/errors.hpp"

namespace qx {

namespace {

const double kLog10Two = std::log10(2.0);
constexpr double kMaxX = 1e300;
constexpr int kMonotoneSamples = 200;

double requirement_log10(const Expr& requirement, double x) { return eval_log10(requirement, x).log10(); }

}  // namespace

std::string to_string(SizeSemantics s) {
  switch (s) {
    case SizeSemantics::Elements:
      return "elements";
    case SizeSemantics::Bits:
      return "bits";
    case SizeSemantics::VariablesLog2:
      return "variables_log2";
  }
  return "?";
}

SizeSemantics size_semantics_from_string(std::string_view text) {
  if (text == "elements") return SizeSemantics::Elements;
  if (text == "bits") return SizeSemantics::Bits;
  if (text == "variables_log2") return SizeSemantics::VariablesLog2;
  throw ValidationError("size_semantics must be elements, bits or variables_log2, got '" + std::string(text) + "'");
}

EffectiveRuntime effective_quantum_runtime(const AlgorithmPair& pair) {
  if (!pair.data_loading) return {pair.quantum_runtime, false};
  if (asymptotic_compare(pair.quantum_runtime, *pair.data_loading) != Order::Less) return {pair.quantum_runtime, false};
  return {*pair.data_loading, true};
}

void check_monotone_requirement(const Expr& requirement) {
  // Geometric samples of x from log10 2 up to 10^6 (n up to 10^(10^6)).
  const double ratio = std::pow(1e6 / kLog10Two, 1.0 / (kMonotoneSamples - 1));
  double prev = requirement_log10(requirement, kLog10Two);
  double x = kLog10Two;
  for (int i = 1; i < kMonotoneSamples; ++i) {
    x *= ratio;
    double v = requirement_log10(requirement, x);
    if (v < prev - 1e-12 * std::max(1.0, std::abs(prev))) {
      throw NonMonotoneQubitRequirement("qubit requirement " + render(requirement) + " decreases near n = 10^" +
                                        std::to_string(x));
    }
    prev = v;
  }
}

CapacityBound max_size_for_qubits(const Expr& requirement, LogMagnitude capacity) {
  const double cap = capacity.log10();
  auto fits = [&](double x) { return requirement_log10(requirement, x) <= cap + 1e-12 * std::max(1.0, std::abs(cap)); };
  if (!fits(kLog10Two)) return {false, std::nullopt};

  double lo = kLog10Two;
  double hi = 2 * kLog10Two;
  while (fits(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > kMaxX) return {true, std::nullopt};
  }
  while (hi - lo > 1e-13 * hi) {
    double mid = 0.5 * (lo + hi);
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  ProblemSize n = ProblemSize::floor_from_log10(lo);
  // floor of a value just under an integer may land one short; step up while
  // the next integer still fits.
  if (n.is_exact()) {
    std::uint64_t v = n.exact_value();
    while (v + 1 < 1000000000000000ULL && fits(std::log10(static_cast<double>(v + 1)))) ++v;
    n = ProblemSize::exact(v);
  }
  return {true, n};
}

std::optional<SizeInterval> qaps(const AlgorithmPair& pair, const Threshold& threshold,
                                 const HardwareScenario& scenario, const GrowthModel& model, double year) {
  check_monotone_requirement(pair.qubit_requirement);
  if (!threshold.is_finite()) return std::nullopt;
  LogMagnitude logical = logical_qubits_available(model, year, scenario.ec_qubit_ratio);
  double whole = std::floor(logical.value() * (1 + 1e-12));
  if (!(whole >= 1.0)) return std::nullopt;
  LogMagnitude capacity = std::isinf(whole) ? logical : LogMagnitude::from_value(whole);

  CapacityBound bound = max_size_for_qubits(pair.qubit_requirement, capacity);
  if (!bound.fits_any) return std::nullopt;
  const ProblemSize& lower = threshold.size();
  if (bound.max_size && *bound.max_size < lower) return std::nullopt;
  return SizeInterval{lower, bound.max_size};
}

std::optional<SizeInterval> qaps(const AlgorithmPair& pair, const HardwareScenario& scenario,
                                 const GrowthModel& model, double year) {
  EffectiveRuntime q = effective_quantum_runtime(pair);
  Threshold t = solve_threshold(pair.classical_runtime, q.runtime, scenario_constant(scenario));
  return qaps(pair, t, scenario, model, year);
}

AdvantageReport analyze(const AlgorithmPair& pair, const HardwareScenario& scenario, const GrowthModel& model,
                        const std::vector<double>& years) {
  if (years.empty()) throw ValidationError("at least one year is required");
  if (!std::is_sorted(years.begin(), years.end())) throw ValidationError("years must be ascending");
  scenario.validate();

  AdvantageReport report;
  EffectiveRuntime q = effective_quantum_runtime(pair);
  report.effective_quantum = q.runtime;
  report.loading_bound_applied = q.loading_bound_applied;
  report.c = scenario_constant(scenario);
  report.threshold = solve_threshold(pair.classical_runtime, q.runtime, report.c);

  if (report.threshold.is_finite()) {
    double need = eval_log10(pair.qubit_requirement, report.threshold.size().log10()).log10();
    // Whole qubits; tiny float noise above an integer does not round up.
    double logical = need < 15 ? std::ceil(std::pow(10.0, need) * (1 - 1e-12)) : std::pow(10.0, need);
    LogMagnitude logical_mag = std::isinf(logical) ? LogMagnitude::from_log10(need) : LogMagnitude::from_value(logical);
    report.logical_qubits_at_threshold = logical_mag;
    report.physical_qubits_at_threshold = logical_mag * LogMagnitude::from_value(scenario.ec_qubit_ratio);
    report.first_advantage_year = year_for_qubits(model, *report.physical_qubits_at_threshold);
  }

  for (double year : years) {
    report.qaps_by_year.push_back({year, qaps(pair, report.threshold, scenario, model, year)});
  }
  return report;
}

SizeConversion convert_size_semantics(const ProblemSize& n, SizeSemantics semantics) {
  switch (semantics) {
    case SizeSemantics::Elements:
      return {n, std::nullopt};
    case SizeSemantics::VariablesLog2: {
      double log2n = n.log10() / kLog10Two;
      return {ProblemSize::ceil_from_log10(std::log10(log2n)), std::nullopt};
    }
    case SizeSemantics::Bits: {
      double bits = n.is_exact() ? static_cast<double>(n.exact_value()) : std::pow(10.0, n.log10());
      return {n, LogMagnitude::from_log10(bits * kLog10Two)};
    }
  }
  return {n, std::nullopt};
}

std::string format_year(double year) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", year);
  return buf;
}

std::string format_year_range(double year) {
  long lo = static_cast<long>(std::floor(year));
  long hi = static_cast<long>(std::ceil(year));
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + "-" + std::to_string(hi);
}

}  // namespace qx
