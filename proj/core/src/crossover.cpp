#include "qx/crossover.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "qx/errors.hpp"

namespace qx {

namespace {

const double kLog10Two = std::log10(2.0);
// Bracket search gives up beyond n = 10^(10^9).
constexpr double kDoublingCap = 1e9;
constexpr int kScanSubdivisions = 64;
constexpr double kBisectionRelTol = 1e-12;

}  // namespace

const ProblemSize& Threshold::size() const {
  if (!size_) throw std::logic_error("no finite threshold");
  return *size_;
}

double Threshold::root_log10() const {
  if (!size_) throw std::logic_error("no finite threshold");
  return root_log10_;
}

Threshold solve_threshold(const Expr& classical, const Expr& quantum, LogMagnitude c) {
  const double log_c = c.log10();
  if (std::isnan(log_c) || log_c < -1e-12) {
    throw InvalidConstant("overhead constant C must be at least 1");
  }
  if (asymptotic_compare(classical, quantum) != Order::Greater) return Threshold::no_advantage();

  auto pc = as_power_law(classical);
  auto pq = as_power_law(quantum);
  if (pc && pq) {
    // c1 n^a = C c2 n^b  =>  log10 n = (log C + log c2 - log c1) / (a - b)
    double gap = (pc->exponent - pq->exponent).to_double();
    double root = (log_c + pq->log10_coefficient - pc->log10_coefficient) / gap;
    root = std::max(root, kLog10Two);
    return Threshold::finite(ProblemSize::ceil_from_log10(root), root);
  }

  auto h = [&](double x) {
    double v = eval_log10(classical, x).log10() - log_c - eval_log10(quantum, x).log10();
    // inf - inf only happens far out where the classical side dominates.
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  std::vector<double> xs;
  std::vector<double> hs;
  for (double x = kLog10Two;; x *= 2.0) {
    if (x > kDoublingCap) throw SolverError("no persistent crossing below n = 10^(10^9)");
    xs.push_back(x);
    hs.push_back(h(x));
    std::size_t k = hs.size();
    if (k >= 3 && hs[k - 3] > 0 && hs[k - 2] >= hs[k - 3] && hs[k - 1] >= hs[k - 2]) break;
  }

  // The last rung at or below zero starts the region to scan finely; if every
  // rung is positive, scan from the domain floor.
  std::size_t start = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i] <= 0) start = i;
  }

  // Fine scan for the last sample at or below zero; the final rung is
  // positive, so it always has a positive successor.
  std::vector<double> samples;
  for (std::size_t i = start; i + 1 < xs.size(); ++i) {
    double step = (xs[i + 1] - xs[i]) / kScanSubdivisions;
    for (int s = 0; s < kScanSubdivisions; ++s) samples.push_back(xs[i] + step * s);
  }
  samples.push_back(xs.back());

  std::optional<std::size_t> last_nonpositive;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (h(samples[i]) <= 0) last_nonpositive = i;
  }
  if (!last_nonpositive) {
    // Quantum is ahead over the whole domain.
    return Threshold::finite(ProblemSize::exact(2), kLog10Two);
  }
  double lo = samples[*last_nonpositive];
  double hi = samples[*last_nonpositive + 1];

  for (int iter = 0; iter < 400 && hi - lo > kBisectionRelTol * hi; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  double root = 0.5 * (lo + hi);
  return Threshold::finite(ProblemSize::ceil_from_log10(root), root);
}

double speedup_at(const Expr& classical, const Expr& quantum, LogMagnitude c, const ProblemSize& n) {
  double x = n.log10();
  return eval_log10(classical, x).log10() - c.log10() - eval_log10(quantum, x).log10();
}

std::string to_string(TrafficLight light) {
  switch (light) {
    case TrafficLight::Green:
      return "green";
    case TrafficLight::Yellow:
      return "yellow";
    case TrafficLight::Red:
      return "red";
  }
  return "?";
}

TrafficLight classify(const Threshold& t) {
  if (!t.is_finite()) return TrafficLight::Red;
  const ProblemSize& n = t.size();
  bool small = n.is_exact() ? n.exact_value() <= 100000 : n.log10() <= 5.0;
  return small ? TrafficLight::Green : TrafficLight::Yellow;
}

std::string display(const ProblemSize& n, const DisplayRule& rule) {
  if (n.is_exact() && n.log10() < rule.exact_below_log10) return std::to_string(n.exact_value());
  return "10^" + std::to_string(static_cast<long long>(std::llround(n.log10())));
}

std::string display(const Threshold& t, const DisplayRule& rule) {
  if (!t.is_finite()) return "no-advantage";
  return display(t.size(), rule);
}

const std::vector<LabeledExpr>& canonical_runtimes() {
  static const std::vector<LabeledExpr> runtimes = {
      {"exp n", parse("exp(n)")}, {"n^3", parse("n^3")}, {"n^2", parse("n^2")},
      {"n log n", parse("n log n")}, {"n", parse("n")},   {"log n", parse("log n")},
  };
  return runtimes;
}

ThresholdGrid threshold_grid(const std::vector<LabeledExpr>& classical, const std::vector<LabeledExpr>& quantum,
                             LogMagnitude c) {
  ThresholdGrid grid{classical, quantum, c, {}};
  grid.cells.reserve(classical.size());
  for (const LabeledExpr& row : classical) {
    std::vector<GridCell> cells;
    cells.reserve(quantum.size());
    for (const LabeledExpr& col : quantum) {
      Threshold t = solve_threshold(row.expr, col.expr, c);
      cells.push_back({t, classify(t)});
    }
    grid.cells.push_back(std::move(cells));
  }
  return grid;
}

}  // namespace qx
