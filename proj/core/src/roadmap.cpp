#include "qx/roadmap.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qx/csv.hpp"
#include "qx/errors.hpp"

namespace qx {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string to_string(RoadmapStatus status) {
  switch (status) {
    case RoadmapStatus::Realized:
      return "realized";
    case RoadmapStatus::Roadmap:
      return "roadmap";
    case RoadmapStatus::Extrapolated:
      return "extrapolated";
  }
  return "?";
}

RoadmapStatus roadmap_status_from_string(std::string_view text) {
  if (text == "realized") return RoadmapStatus::Realized;
  if (text == "roadmap") return RoadmapStatus::Roadmap;
  if (text == "extrapolated") return RoadmapStatus::Extrapolated;
  throw ValidationError("status must be realized, roadmap or extrapolated, got '" + std::string(text) + "'");
}

std::vector<RoadmapPoint> parse_roadmap_csv(std::string_view text) {
  std::vector<RoadmapPoint> points;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (!header_seen) {
      if (trim(line) != "provider,year,physical_qubits,status") {
        throw SchemaError("header must be 'provider,year,physical_qubits,status'", 0);
      }
      header_seen = true;
      continue;
    }
    ++row;
    std::vector<std::string> fields;
    try {
      fields = csv::split_record(line);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what(), row);
    }
    if (fields.size() != 4) throw SchemaError("expected 4 fields", row);
    for (std::string& f : fields) f = trim(f);

    RoadmapPoint p;
    p.provider = fields[0];
    if (p.provider.empty()) throw SchemaError("empty provider", row);

    const std::string& y = fields[1];
    auto [yend, yerr] = std::from_chars(y.data(), y.data() + y.size(), p.year);
    if (yerr != std::errc() || yend != y.data() + y.size()) throw SchemaError("year is not a number", row);
    if (!(p.year >= 1990.0 && p.year <= 2100.0)) throw SchemaError("year outside [1990, 2100]", row);

    const std::string& q = fields[2];
    auto [qend, qerr] = std::from_chars(q.data(), q.data() + q.size(), p.physical_qubits);
    if (qerr != std::errc() || qend != q.data() + q.size()) {
      throw SchemaError("physical_qubits is not a positive integer", row);
    }
    if (p.physical_qubits < 1) throw SchemaError("physical_qubits must be at least 1", row);

    try {
      p.status = roadmap_status_from_string(fields[3]);
    } catch (const ValidationError& e) {
      throw SchemaError(e.what(), row);
    }
    points.push_back(std::move(p));
  }
  if (!header_seen) throw SchemaError("missing header", 0);
  return points;
}

std::vector<RoadmapPoint> load_roadmap(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string(), 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_roadmap_csv(buffer.str());
}

GrowthModel fit_growth(const std::vector<RoadmapPoint>& points) {
  std::vector<const RoadmapPoint*> used;
  for (const RoadmapPoint& p : points) {
    if (p.status != RoadmapStatus::Extrapolated) used.push_back(&p);
  }
  if (used.size() < 2) throw InsufficientData("need at least 2 realized or roadmap points");

  GrowthModel m;
  m.provider = used.front()->provider;
  m.points = used.size();
  m.reference_year = (*std::min_element(used.begin(), used.end(), [](auto* a, auto* b) {
                       return a->year < b->year;
                     }))->year;

  const long double count = static_cast<long double>(used.size());
  long double mean_t = 0;
  long double mean_y = 0;
  for (const RoadmapPoint* p : used) {
    mean_t += p->year - m.reference_year;
    mean_y += std::log10(static_cast<long double>(p->physical_qubits));
  }
  mean_t /= count;
  mean_y /= count;

  long double stt = 0;
  long double sty = 0;
  long double syy = 0;
  for (const RoadmapPoint* p : used) {
    long double dt = (p->year - m.reference_year) - mean_t;
    long double dy = std::log10(static_cast<long double>(p->physical_qubits)) - mean_y;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  if (stt == 0) throw DegenerateData("all roadmap points share one year");

  long double slope = sty / stt;
  if (!(slope > 0)) throw DegenerateData("qubit counts do not grow over time");
  m.slope = static_cast<double>(slope);
  m.intercept = static_cast<double>(mean_y - slope * mean_t);
  if (used.size() >= 3) {
    m.r_squared = syy == 0 ? 1.0 : static_cast<double>(std::clamp(sty * sty / (stt * syy), 0.0L, 1.0L));
  }
  return m;
}

LogMagnitude project_qubits(const GrowthModel& m, double year) {
  return LogMagnitude::from_log10(m.intercept + m.slope * (year - m.reference_year));
}

double year_for_qubits(const GrowthModel& m, LogMagnitude physical_qubits) {
  return m.reference_year + (physical_qubits.log10() - m.intercept) / m.slope;
}

LogMagnitude logical_qubits_available(const GrowthModel& m, double year, double ec_qubit_ratio) {
  if (!(ec_qubit_ratio >= 1.0)) throw ValidationError("ec_qubit_ratio must be at least 1");
  return project_qubits(m, year) / LogMagnitude::from_value(ec_qubit_ratio);
}

}  // namespace qx
