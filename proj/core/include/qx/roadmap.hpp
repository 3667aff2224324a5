#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qx/log_magnitude.hpp"

namespace qx {

enum class RoadmapStatus { Realized, Roadmap, Extrapolated };

std::string to_string(RoadmapStatus status);
RoadmapStatus roadmap_status_from_string(std::string_view text);

struct RoadmapPoint {
  std::string provider;
  double year = 0.0;
  std::uint64_t physical_qubits = 1;
  RoadmapStatus status = RoadmapStatus::Realized;
};

// Exponential qubit growth: log10 qubits = intercept + slope * (year - reference_year).
struct GrowthModel {
  std::string provider;
  double reference_year = 0.0;
  double intercept = 0.0;
  double slope = 0.0;
  std::optional<double> r_squared;  // absent for two-point fits
  std::size_t points = 0;
};

// CSV with header `provider,year,physical_qubits,status`. Rows are checked
// for year in [1990, 2100] and qubits >= 1; errors carry the 1-based data
// row as a SchemaError.
std::vector<RoadmapPoint> parse_roadmap_csv(std::string_view text);
std::vector<RoadmapPoint> load_roadmap(const std::filesystem::path& path);

// Ordinary least squares of log10 qubits on year over the realized and
// roadmap points; the reference year is the earliest of those.
// Throws InsufficientData (< 2 points), DegenerateData (one distinct year or
// nonpositive slope).
GrowthModel fit_growth(const std::vector<RoadmapPoint>& points);

LogMagnitude project_qubits(const GrowthModel& m, double year);
double year_for_qubits(const GrowthModel& m, LogMagnitude physical_qubits);
LogMagnitude logical_qubits_available(const GrowthModel& m, double year, double ec_qubit_ratio);

}  // namespace qx
