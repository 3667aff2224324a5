// Acceptance checks. `acceptance [N ...]` runs the listed criteria (all by
// default) and prints one PASS/FAIL line each; the exit code is the number
// of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "http_api.hpp"
#include "oracles/oracles.hpp"
#include "qx/advantage.hpp"
#include "qx/catalog.hpp"
#include "qx/crossover.hpp"
#include "qx/roadmap.hpp"
#include "service.hpp"
#include "support/random_pairs.hpp"

using qx::LogMagnitude;

namespace {

const std::string kData = QX_TEST_DATA_DIR;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s << what << " = " << got << ", want " << want << " +-" << tol;
    expect(std::fabs(got - want) <= tol, s.str());
  }
  void within(double got, double lo, double hi, const std::string& what) {
    std::ostringstream s;
    s << what << " = " << got << ", want [" << lo << ", " << hi << "]";
    expect(got >= lo && got <= hi, s.str());
  }

  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (ok()) return std::to_string(count_) + " checks";
    std::string out = std::to_string(failures_.size()) + "/" + std::to_string(count_) + " checks failed: ";
    for (std::size_t i = 0; i < failures_.size(); ++i) out += (i ? "; " : "") + failures_[i];
    return out;
  }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

// A grid cell value: small integers are +-1, "10^k" cells compare log10 n* with k +-0.5.
struct Want {
  double value;
  bool power = false;
};
Want P(double k) { return {k, true}; }

void check_row(Check& c, const qx::ThresholdGrid& g, const std::string& name, int row, int first_col,
               const std::vector<Want>& wants) {
  for (std::size_t k = 0; k < wants.size(); ++k) {
    int col = first_col + static_cast<int>(k);
    std::string what = name + "[" + g.classical[row].label + " vs " + g.quantum[col].label + "]";
    const qx::Threshold& t = g.cells[row][col].threshold;
    if (!t.is_finite()) {
      c.expect(false, what + " is no-advantage");
      continue;
    }
    if (wants[k].power) {
      c.near(t.size().log10(), wants[k].value, 0.5, what + " log10");
    } else {
      c.near(static_cast<double>(t.size().exact_value()), wants[k].value, 1, what);
    }
  }
}

void check_red_cells(Check& c, const qx::ThresholdGrid& g, const std::string& name) {
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      c.expect(!g.cells[i][k].threshold.is_finite(), name + " cell " + std::to_string(i) + "," + std::to_string(k) + " should be no-advantage");
    }
  }
}

qx::ThresholdGrid grid(double log_c) {
  const auto& rt = qx::canonical_runtimes();
  return qx::threshold_grid(rt, rt, LogMagnitude::from_log10(log_c));
}

const std::vector<qx::CatalogEntry>& catalog() {
  static const auto entries = qx::load_catalog(kData + "/catalog.json");
  return entries;
}

const qx::HardwareScenario& scenario(const std::string& name) {
  return qx::find_scenario(qx::builtin_scenarios(), name);
}

qx::GrowthModel model(const std::string& provider) {
  return qx::fit_growth(qx::load_roadmap(kData + "/roadmaps/" + provider + ".csv"));
}

Check base_grid() {
  Check c;
  auto start = std::chrono::steady_clock::now();
  auto g = grid(6);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check_row(c, g, "base", 0, 1, {{23}, {20}, {18}, {17}, {15}});
  check_row(c, g, "base", 1, 2, {P(6), {2819}, {1000}, {173}});
  check_row(c, g, "base", 2, 3, {P(7), P(6), {2819}});
  c.within(g.cells[3][4].threshold.size().log10(), 434293, 434296, "base[n log n vs n] log10");
  check_red_cells(c, g, "base");
  c.within(seconds, 0, 1, "grid seconds");
  return c;
}

Check scenario_grids() {
  Check c;
  auto o = grid(4);
  check_row(c, o, "optimistic", 0, 1, {{18}, {15}, {13}, {11}, {10}});
  check_row(c, o, "optimistic", 1, 2, {P(4), {234}, {100}, {33}});
  check_row(c, o, "optimistic", 2, 3, {P(6), P(4), {234}});
  c.within(o.cells[3][4].threshold.size().log10(), 4342, 4344, "optimistic huge cell log10");

  auto p = grid(8);
  check_row(c, p, "pessimistic", 0, 1, {{28}, {25}, {23}, {21}, {20}});
  check_row(c, p, "pessimistic", 1, 3, {P(5), P(4), {878}});
  c.within(p.cells[3][4].threshold.size().log10(), 43429447, 43429450, "pessimistic huge cell log10");

  auto a = grid(3);
  check_row(c, a, "appendix", 0, 1, {{15}, {12}, {10}, {9}, {8}});
  check_row(c, a, "appendix", 1, 2, {P(3), {65}, {32}, {14}});
  check_row(c, a, "appendix", 2, 3, {{9118}, P(3), {65}});
  c.within(a.cells[3][4].threshold.size().log10(), 434, 435, "appendix huge cell log10");
  for (const auto* g : {&o, &p, &a}) check_red_cells(c, *g, "scenario");
  return c;
}

Check grover() {
  Check c;
  auto pair = qx::find_entry(catalog(), "grover").pair();
  auto r = qx::analyze(pair, scenario("base"), model("ibm"), {2030});
  c.expect(r.threshold.is_finite() && r.threshold.size().is_exact() &&
               r.threshold.size().exact_value() == 1000000000000ULL,
           "n* should be exactly 10^12, got " + qx::display(r.threshold, qx::DisplayRule{16}));
  c.expect(r.logical_qubits_at_threshold && std::fabs(r.logical_qubits_at_threshold->value() - 40) < 1e-9, "logical qubits should be 40");
  c.expect(r.physical_qubits_at_threshold && std::round(r.physical_qubits_at_threshold->value()) == 40000,
           "physical qubits should be 40000");
  c.within(r.first_advantage_year.value_or(0), 2026, 2028, "first advantage year");
  return c;
}

Check factoring() {
  Check c;
  const auto& shor = qx::find_entry(catalog(), "shor");
  const double x = std::log10(2048.0);
  double nfs = qx::eval_log10(shor.classical_runtime, x).log10();
  c.within(nfs, 40.5, 41.5, "NFS@2048 log10 ops");
  const auto& s = scenario("base");
  double cpu_years = qx::estimate_runtime(LogMagnitude::from_log10(nfs), s, qx::Machine::Classical, std::pow(10.0, 24.5)).log10();
  c.within(cpu_years, 15.5, 17.0, "classical log10 cpu-years");
  LogMagnitude shor_ops = qx::eval_log10(*shor.quantum_runtime, x);
  c.within(shor_ops.log10(), 7.0, 8.0, "Shor@2048 log10 logical ops");
  qx::HardwareScenario overhead = s;
  overhead.c_gate_overhead = 100;
  double seconds = qx::estimate_runtime(shor_ops, overhead, qx::Machine::Quantum, qx::MachineRates::kQuantumGateOpsPerSecond).value();
  c.within(seconds, 0, 86400, "quantum wall seconds");
  return c;
}

Check qft_hhl() {
  Check c;
  for (const char* id : {"qft", "hhl"}) {
    auto r = qx::analyze(qx::find_entry(catalog(), id).pair(), scenario("base"), model("ibm"), {2030});
    c.expect(r.threshold.is_finite(), std::string(id) + " has no advantage");
    if (r.threshold.is_finite()) c.within(r.threshold.size().log10(), 7.0, 7.5, std::string(id) + " log10 n*");
  }
  return c;
}

Check oracle_equivalence() {
  Check c;
  support::PairGen gen(20240601);
  int scanned = 0;
  int power = 0;
  for (int i = 0; i < 200; ++i) {
    auto f = gen.runtime();
    auto g = gen.runtime();
    double log_c = i % 2 ? 3 : 6;
    std::string what = f.text + " vs " + g.text + " C=10^" + std::to_string(static_cast<int>(log_c));
    auto scan = oracle::integer_scan_threshold(f.ln, g.ln, log_c * std::log(10.0L), 1000000);
    std::optional<qx::Threshold> t;
    try {
      t = qx::solve_threshold(qx::parse(f.text), qx::parse(g.text), LogMagnitude::from_log10(log_c));
    } catch (const std::exception& e) {
      c.expect(!scan, what + ": " + e.what());
      continue;
    }
    if (scan) {
      ++scanned;
      bool finite = t->is_finite() && t->size().is_exact();
      c.expect(finite, what + ": solver found no finite threshold, scan " + std::to_string(*scan));
      if (finite) c.near(static_cast<double>(t->size().exact_value()), static_cast<double>(*scan), 1, what);
    }
    if (f.family == support::Runtime::Power && g.family == support::Runtime::Power && f.param > g.param &&
        log_c / (f.param - g.param) < 14.9) {
      ++power;
      auto want = oracle::power_law_threshold(std::pow(10.0L, log_c), f.param, g.param);
      c.expect(t->is_finite() && t->size().exact_value() == want, what + ": want " + std::to_string(want));
    }
  }
  c.expect(scanned >= 40, "only " + std::to_string(scanned) + " pairs terminated below 10^6");
  c.expect(power >= 5, "only " + std::to_string(power) + " power-law pairs");
  return c;
}

Check regression() {
  Check c;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> slope_d(0.1, 1.0), icpt_d(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    double slope = slope_d(rng);
    double intercept = icpt_d(rng);
    // Real-valued qubit counts are integers in the data model, so pick years
    // where 10^(intercept + slope t) lands on an integer.
    std::vector<qx::RoadmapPoint> pts;
    for (int k = 0; k < 3 + trial % 5; ++k) {
      double q = std::round(std::pow(10.0, intercept + slope * k * 2));
      double year = 2000 + (std::log10(q) - intercept) / slope;
      pts.push_back({"x", year, static_cast<std::uint64_t>(q), qx::RoadmapStatus::Realized});
    }
    auto m = qx::fit_growth(pts);
    double ref_shift = m.reference_year - 2000;
    c.near(m.slope, slope, 1e-9, "synthetic slope");
    c.near(m.intercept, intercept + slope * ref_shift, 1e-9, "synthetic intercept");
  }
  auto ibm = model("ibm");
  for (double y = 2015; y <= 2060; y += 0.5) {
    c.near(qx::year_for_qubits(ibm, qx::project_qubits(ibm, y)), y, 1e-9, "year_for(project(y))");
  }
  c.within(qx::year_for_qubits(model("ionq"), LogMagnitude::from_log10(3)), 2029, 2031, "IonQ year for 10^3 qubits");
  return c;
}

Check catalog_checks() {
  Check c;
  std::vector<qx::CatalogEntry> entries;
  try {
    entries = qx::load_catalog(kData + "/catalog.json");
  } catch (const std::exception& e) {
    c.expect(false, std::string("load: ") + e.what());
    return c;
  }
  c.expect(entries.size() >= 100, "catalog has " + std::to_string(entries.size()) + " entries");
  for (const auto& e : entries) {
    auto label = qx::parse(e.runtime_class_label);
    c.expect(qx::asymptotic_compare(label, e.classical_runtime) == qx::Order::Equal, e.id + " label differs from runtime");
  }
  auto rows = qx::classify_catalog(entries, scenario("base"), true);
  int exp_poly = 0;
  for (const auto& r : rows) {
    const auto& e = *r.entry;
    bool exp_classical = qx::asymptotic_compare(e.classical_runtime, qx::parse("n^20")) == qx::Order::Greater;
    bool poly_quantum = r.quantum_label == "pair" ? qx::as_power_law(*e.quantum_runtime) ||
                                                        qx::asymptotic_compare(*e.quantum_runtime, qx::parse("n^20")) == qx::Order::Less
                                                  : r.quantum_label != "exp n";
    if (!exp_classical || !poly_quantum) continue;
    ++exp_poly;
    c.expect(r.light == qx::TrafficLight::Green, e.id + " vs " + r.quantum_label + " is " + qx::to_string(r.light));
  }
  c.expect(exp_poly > 0, "no exponential/polynomial pairs");
  for (const auto& r : rows) {
    if (r.entry->id == "grover" && r.quantum_label == "pair") {
      c.expect(r.light == qx::TrafficLight::Yellow, "grover is " + qx::to_string(r.light));
    }
  }
  return c;
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + QX_CLI_PATH + "\" --data-dir \"" + kData + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Check parity() {
  Check c;
  auto ctx = qx::service::load_context(kData);
  httplib::Server server;
  qx::service::register_routes(server, ctx, std::nullopt);
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);

  std::mt19937_64 rng(9);
  support::PairGen gen(77);
  const std::vector<std::string> scenarios{"base", "optimistic", "pessimistic", "appendix", "serial", "cost"};
  const std::vector<std::string> cs{"1e3", "10^4", "2.5e5", "1e6", "10^8"};
  const std::vector<std::string> ids{"grover", "shor", "qft", "hhl"};
  auto pick = [&](const std::vector<std::string>& v) { return v[rng() % v.size()]; };

  for (int i = 0; i < 20; ++i) {
    std::string endpoint = i % 3 == 0 ? "threshold" : i % 3 == 1 ? "grid" : "analyze";
    httplib::Params p{{"format", "json"}};
    std::string args = endpoint + " --format json";
    auto both = [&](const std::string& key, const std::string& flag, const std::string& value) {
      p.emplace(key, value);
      args += " " + flag + " " + quote(value);
    };
    if (rng() % 2) both("C", "-C", pick(cs));
    else both("scenario", "--scenario", pick(scenarios));
    if (endpoint == "threshold") {
      both("classical", "--classical", gen.runtime().text);
      both("quantum", "--quantum", gen.runtime().text);
    } else if (endpoint == "analyze") {
      both("id", "--id", pick(ids));
      both("provider", "--provider", rng() % 2 ? "ibm" : "ionq");
      int from = 2022 + static_cast<int>(rng() % 5);
      both("years", "--years", std::to_string(from) + ":" + std::to_string(from + 10));
    }
    auto r = client.Get("/api/" + endpoint, p, httplib::Headers{});
    if (!r) {
      c.expect(false, endpoint + ": no HTTP response");
      continue;
    }
    std::string cli = run_cli(args + " 2>/dev/null");
    c.expect(r->status == 200 || r->status == 422, endpoint + " status " + std::to_string(r->status) + ": " + r->body);
    c.expect(r->status != 200 || r->body == cli, endpoint + " payloads differ for: " + args);
  }
  server.stop();
  thread.join();
  return c;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Check()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "base grid reproduction", base_grid},
      {2, "optimistic, pessimistic and appendix grids", scenario_grids},
      {3, "Grover case study", grover},
      {4, "factoring case study", factoring},
      {5, "QFT and HHL thresholds", qft_hhl},
      {6, "oracle equivalence", oracle_equivalence},
      {7, "roadmap regression properties", regression},
      {8, "catalog validation and classification", catalog_checks},
      {9, "CLI/HTTP parity", parity},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (const Criterion& cr : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), cr.number) == selected.end()) continue;
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s: %s\n", c.ok() ? "PASS" : "FAIL", cr.number, cr.title, c.summary().c_str());
    if (!c.ok()) ++failures;
  }
  return failures;
}
