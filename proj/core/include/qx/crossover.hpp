#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qx/expr.hpp"
#include "qx/log_magnitude.hpp"

namespace qx {

// Result of solving f(n*) = C g(n*): a finite threshold or no advantage.
class Threshold {
 public:
  static Threshold no_advantage() { return Threshold(); }
  static Threshold finite(ProblemSize size, double root_log10) { return Threshold(size, root_log10); }

  bool is_finite() const noexcept { return size_.has_value(); }
  // Throws std::logic_error for NoAdvantage.
  const ProblemSize& size() const;
  // log10 of the continuous root (before taking the integer ceiling).
  double root_log10() const;

 private:
  Threshold() = default;
  Threshold(ProblemSize size, double root_log10) : size_(size), root_log10_(root_log10) {}

  std::optional<ProblemSize> size_;
  double root_log10_ = 0.0;
};

// Smallest n beyond which C * quantum(n) stays below classical(n). Pure power
// laws are solved in closed form; everything else by a doubling search on
// log10 n followed by bisection of the last sign change.
// Throws InvalidConstant if C < 1.
Threshold solve_threshold(const Expr& classical, const Expr& quantum, LogMagnitude c);

// log10 f(n) - log10(C g(n)); positive means quantum is faster by that many
// decades.
double speedup_at(const Expr& classical, const Expr& quantum, LogMagnitude c, const ProblemSize& n);

enum class TrafficLight { Green, Yellow, Red };

std::string to_string(TrafficLight light);
// Red: no advantage; Green: n* <= 10^5; Yellow: finite n* > 10^5.
TrafficLight classify(const Threshold& t);

struct DisplayRule {
  // Thresholds below 10^exact_below_log10 print as exact integers,
  // larger ones as 10^k with k = round(log10 n*).
  double exact_below_log10 = 4.0;
};

// "1000", "10^12" or "no-advantage".
std::string display(const Threshold& t, const DisplayRule& rule = {});
std::string display(const ProblemSize& n, const DisplayRule& rule = {});

struct LabeledExpr {
  std::string label;
  Expr expr;
};

// exp n, n^3, n^2, n log n, n, log n.
const std::vector<LabeledExpr>& canonical_runtimes();

struct GridCell {
  Threshold threshold;
  TrafficLight light;
};

struct ThresholdGrid {
  std::vector<LabeledExpr> classical;  // rows
  std::vector<LabeledExpr> quantum;    // columns
  LogMagnitude c;
  std::vector<std::vector<GridCell>> cells;  // [row][column]
};

ThresholdGrid threshold_grid(const std::vector<LabeledExpr>& classical, const std::vector<LabeledExpr>& quantum,
                             LogMagnitude c);

}  // namespace qx
