#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "qx/advantage.hpp"
#include "qx/catalog.hpp"
#include "qx/errors.hpp"

using qx::AlgorithmPair;
using qx::LogMagnitude;
using qx::ProblemSize;

namespace {

const std::string kData = QX_TEST_DATA_DIR;

const std::vector<qx::CatalogEntry>& catalog() {
  static const auto entries = qx::load_catalog(kData + "/catalog.json");
  return entries;
}

AlgorithmPair pair(const std::string& id) { return qx::find_entry(catalog(), id).pair(); }

const qx::GrowthModel& ibm() {
  static const auto m = qx::fit_growth(qx::load_roadmap(kData + "/roadmaps/ibm.csv"));
  return m;
}

const qx::HardwareScenario& scenario(const std::string& name) {
  return qx::find_scenario(qx::builtin_scenarios(), name);
}

AlgorithmPair make(const std::string& classical, const std::string& quantum, const std::string& qubits = "log(n) / log(2)") {
  AlgorithmPair p;
  p.id = "t";
  p.classical_runtime = qx::parse(classical);
  p.quantum_runtime = qx::parse(quantum);
  p.qubit_requirement = qx::parse(qubits);
  return p;
}

std::vector<double> years(int from, int to) {
  std::vector<double> ys;
  for (int y = from; y <= to; ++y) ys.push_back(y);
  return ys;
}

}  // namespace

TEST(Effective, LoadingBound) {
  AlgorithmPair p = make("n^2", "log(n)");
  auto e = qx::effective_quantum_runtime(p);
  EXPECT_FALSE(e.loading_bound_applied);
  EXPECT_EQ(e.runtime, p.quantum_runtime);

  p.data_loading = qx::parse("n");
  e = qx::effective_quantum_runtime(p);
  EXPECT_TRUE(e.loading_bound_applied);
  EXPECT_EQ(e.runtime, qx::parse("n"));

  p.data_loading = qx::parse("sqrt(n)");
  p.quantum_runtime = qx::parse("n");
  EXPECT_FALSE(qx::effective_quantum_runtime(p).loading_bound_applied);

  // Equal order keeps the quantum runtime.
  p.data_loading = qx::parse("3 n");
  EXPECT_FALSE(qx::effective_quantum_runtime(p).loading_bound_applied);
}

TEST(Effective, LoadingChangesThreshold) {
  AlgorithmPair p = make("n^2", "log(n)");
  p.data_loading = qx::parse("n");
  auto r = qx::analyze(p, scenario("base"), ibm(), {2030});
  ASSERT_TRUE(r.threshold.is_finite());
  EXPECT_TRUE(r.loading_bound_applied);
  // n^2 = 10^6 n.
  EXPECT_EQ(r.threshold.size().exact_value(), 1000000u);
}

TEST(Analyze, Grover) {
  auto r = qx::analyze(pair("grover"), scenario("base"), ibm(), years(2024, 2035));
  ASSERT_TRUE(r.threshold.is_finite());
  EXPECT_EQ(r.threshold.size().exact_value(), 1000000000000u);
  EXPECT_EQ(qx::display(r.threshold), "10^12");
  ASSERT_TRUE(r.logical_qubits_at_threshold);
  EXPECT_NEAR(r.logical_qubits_at_threshold->value(), 40, 1e-9);
  EXPECT_NEAR(r.physical_qubits_at_threshold->value(), 40000, 1e-6);
  ASSERT_TRUE(r.first_advantage_year);
  double oracle_year = ibm().reference_year + (std::log10(40000.0) - ibm().intercept) / ibm().slope;
  EXPECT_NEAR(*r.first_advantage_year, oracle_year, 1e-9);
  EXPECT_EQ(qx::format_year_range(*r.first_advantage_year), "2026-2027");
  EXPECT_EQ(qx::format_year(*r.first_advantage_year), "2026.9");
  ASSERT_EQ(r.qaps_by_year.size(), 12u);
  EXPECT_FALSE(r.qaps_by_year[0].interval);
}

TEST(Analyze, NoAdvantage) {
  auto r = qx::analyze(make("log(n)", "n"), scenario("base"), ibm(), years(2024, 2030));
  EXPECT_FALSE(r.threshold.is_finite());
  EXPECT_FALSE(r.logical_qubits_at_threshold);
  EXPECT_FALSE(r.physical_qubits_at_threshold);
  EXPECT_FALSE(r.first_advantage_year);
  for (const auto& q : r.qaps_by_year) EXPECT_FALSE(q.interval);
}

TEST(Analyze, QftMatchesScan) {
  auto r = qx::analyze(pair("qft"), scenario("base"), ibm(), {2030});
  ASSERT_TRUE(r.threshold.is_finite());
  auto scan = oracle::integer_scan_threshold(
      [](long double n) { return std::log(n) + std::log(std::log(n)); },
      [](long double n) { return 2 * std::log(std::log(n)); }, 6 * std::log(10.0L), 1000000000);
  ASSERT_TRUE(scan);
  EXPECT_NEAR(static_cast<double>(r.threshold.size().exact_value()), static_cast<double>(*scan), 1);
  // ceil(log2 n*)
  EXPECT_NEAR(r.logical_qubits_at_threshold->value(), std::ceil(std::log2(static_cast<double>(*scan))), 1e-9);
}

TEST(Analyze, RejectsBadYears) {
  EXPECT_THROW(qx::analyze(pair("grover"), scenario("base"), ibm(), {}), qx::ValidationError);
  EXPECT_THROW(qx::analyze(pair("grover"), scenario("base"), ibm(), {2030, 2025}), qx::ValidationError);
}

TEST(Qaps, GroverYears) {
  auto p = pair("grover");
  EXPECT_FALSE(qx::qaps(p, scenario("base"), ibm(), 2024));

  auto q = qx::qaps(p, scenario("base"), ibm(), 2030);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->lower.exact_value(), 1000000000000u);
  ASSERT_TRUE(q->upper);
  // Largest n with log2 n <= floor(available logical qubits).
  double logical = qx::logical_qubits_available(ibm(), 2030, 1000).value();
  EXPECT_NEAR(q->upper->log10(), std::floor(logical) * std::log10(2.0), 1e-6);
}

TEST(Qaps, UpperIsLargestFittingInteger) {
  // Requirement n: capacity c gives exactly floor(c).
  AlgorithmPair p = make("exp(n)", "n^2", "n");
  auto t = qx::solve_threshold(p.classical_runtime, p.quantum_runtime, LogMagnitude::from_log10(6));
  for (double y : {2026.0, 2028.0, 2031.5}) {
    auto q = qx::qaps(p, t, scenario("base"), ibm(), y);
    double cap = std::floor(qx::logical_qubits_available(ibm(), y, 1000).value());
    if (cap < static_cast<double>(t.size().exact_value())) {
      EXPECT_FALSE(q) << y;
      continue;
    }
    ASSERT_TRUE(q && q->upper) << y;
    EXPECT_EQ(q->upper->exact_value(), static_cast<std::uint64_t>(cap)) << y;
  }
}

TEST(Property, QapsGrowsWithYear) {
  for (const char* id : {"grover", "qft", "hhl", "shor"}) {
    auto r = qx::analyze(pair(id), scenario("base"), ibm(), years(2020, 2060));
    std::optional<ProblemSize> prev_upper;
    bool seen = false;
    for (const auto& q : r.qaps_by_year) {
      if (!q.interval) {
        EXPECT_FALSE(seen) << id << " " << q.year;
        continue;
      }
      seen = true;
      EXPECT_EQ(q.interval->lower, r.threshold.size());
      if (prev_upper && q.interval->upper) EXPECT_GE(q.interval->upper->log10(), prev_upper->log10());
      if (!q.interval->upper) prev_upper.reset();
      else prev_upper = q.interval->upper;
    }
    EXPECT_TRUE(seen) << id;
  }
}

TEST(Property, FirstYearIsQapsInfimum) {
  for (const char* id : {"grover", "qft", "hhl", "shor"}) {
    auto p = pair(id);
    auto r = qx::analyze(p, scenario("base"), ibm(), {2030});
    ASSERT_TRUE(r.first_advantage_year) << id;
    std::optional<double> first;
    for (int k = 0; k <= 400; ++k) {
      double y = 2019 + 0.1 * k;
      if (qx::qaps(p, r.threshold, scenario("base"), ibm(), y)) {
        first = y;
        break;
      }
    }
    ASSERT_TRUE(first) << id;
    EXPECT_GE(*first + 1e-9, *r.first_advantage_year) << id;
    EXPECT_LT(*first - 0.1, *r.first_advantage_year) << id;
  }
}

TEST(Property, HarsherScenariosAreLater) {
  for (const char* id : {"grover", "qft", "hhl"}) {
    auto p = pair(id);
    double prev_threshold = 0;
    double prev_year = 0;
    for (const char* s : {"appendix", "optimistic", "base", "pessimistic"}) {
      auto r = qx::analyze(p, scenario(s), ibm(), {2030});
      ASSERT_TRUE(r.threshold.is_finite());
      EXPECT_GE(r.threshold.size().log10(), prev_threshold) << id << " " << s;
      EXPECT_GE(*r.first_advantage_year, prev_year) << id << " " << s;
      prev_threshold = r.threshold.size().log10();
      prev_year = *r.first_advantage_year;
    }
  }
}

TEST(Capacity, Bounds) {
  auto req = qx::parse("log(n) / log(2)");
  auto b = qx::max_size_for_qubits(req, LogMagnitude::from_log10(std::log10(20.0)));
  EXPECT_TRUE(b.fits_any);
  ASSERT_TRUE(b.max_size);
  EXPECT_EQ(b.max_size->exact_value(), 1u << 20);

  auto none = qx::max_size_for_qubits(qx::parse("n + 100"), LogMagnitude::from_log10(1));
  EXPECT_FALSE(none.fits_any);

  auto unbounded = qx::max_size_for_qubits(qx::parse("log(log(n))"), LogMagnitude::from_log10(4));
  EXPECT_TRUE(unbounded.fits_any);
  EXPECT_FALSE(unbounded.max_size);
}

TEST(Capacity, MonotoneCheck) {
  EXPECT_NO_THROW(qx::check_monotone_requirement(qx::parse("n")));
  EXPECT_NO_THROW(qx::check_monotone_requirement(qx::parse("log(n) / log(2)")));
  EXPECT_THROW(qx::check_monotone_requirement(qx::parse("1000 / log(n)")), qx::NonMonotoneQubitRequirement);
}

TEST(Semantics, Convert) {
  auto v = qx::convert_size_semantics(ProblemSize::exact(1000000000000), qx::SizeSemantics::VariablesLog2);
  EXPECT_EQ(v.size.exact_value(), 40u);
  EXPECT_FALSE(v.value);

  auto b = qx::convert_size_semantics(ProblemSize::exact(20), qx::SizeSemantics::Bits);
  EXPECT_EQ(b.size.exact_value(), 20u);
  ASSERT_TRUE(b.value);
  EXPECT_NEAR(b.value->value(), 1 << 20, 1e-6);

  auto e = qx::convert_size_semantics(ProblemSize::exact(777), qx::SizeSemantics::Elements);
  EXPECT_EQ(e.size.exact_value(), 777u);
  EXPECT_FALSE(e.value);

  for (auto s : {qx::SizeSemantics::Elements, qx::SizeSemantics::Bits, qx::SizeSemantics::VariablesLog2}) {
    EXPECT_EQ(qx::size_semantics_from_string(qx::to_string(s)), s);
  }
}

TEST(Years, Format) {
  EXPECT_EQ(qx::format_year(2026.8995), "2026.9");
  EXPECT_EQ(qx::format_year_range(2026.8995), "2026-2027");
  EXPECT_EQ(qx::format_year_range(2030.0), "2030");
}
