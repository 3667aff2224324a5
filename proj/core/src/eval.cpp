#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qx/errors.hpp"
#include "qx/expr.hpp"

namespace qx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLog10Two = std::log10(2.0);
const double kLnTwo = std::numbers::ln2;

// Above this log10 value, 10^v overflows a double.
constexpr double kMaxLog10 = 308.0;

double eval_node(const Expr& e, double x) {
  switch (e.kind()) {
    case NodeKind::Const:
      return e.number().log10();
    case NodeKind::Var:
      return x;
    case NodeKind::Log: {
      double v = eval_node(e.child(), x);
      if (v == kInf) return kInf;
      // ln(child) = v * ln 10, floored at ln 2.
      double ln_child = std::max(v * std::numbers::ln10, kLnTwo);
      return std::log10(ln_child);
    }
    case NodeKind::Exp: {
      double v = eval_node(e.child(), x);
      if (v > kMaxLog10) return kInf;
      return std::pow(10.0, v) * std::numbers::log10e;
    }
    case NodeKind::Pow: {
      double v = eval_node(e.child(), x);
      const Rational& q = e.number();
      if (q.is_zero()) return 0.0;
      return v * q.to_double();
    }
    case NodeKind::Mul: {
      double sum = 0.0;
      for (const Expr& f : e.children()) sum += eval_node(f, x);
      return sum;
    }
    case NodeKind::Add: {
      std::vector<double> terms;
      terms.reserve(e.children().size());
      for (const Expr& t : e.children()) terms.push_back(eval_node(t, x));
      double top = *std::max_element(terms.begin(), terms.end());
      if (std::isinf(top)) return top;
      double acc = 0.0;
      for (double t : terms) acc += std::pow(10.0, t - top);
      return top + std::log10(acc);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

LogMagnitude eval_log10(const Expr& e, double x) {
  if (!(x >= kLog10Two - 1e-15)) {
    throw DomainError("problem size must be at least 2 (log10 n >= log10 2)");
  }
  return LogMagnitude::from_log10(eval_node(e, x));
}

std::string to_string(Order o) {
  switch (o) {
    case Order::Less:
      return "less";
    case Order::Equal:
      return "equal";
    case Order::Greater:
      return "greater";
  }
  return "?";
}

namespace {

// Ladder parameters: rungs x_k = log10(2) * 2^(k/4). The ladder ends when
// either side's log10 value leaves the range where differences between the
// two still resolve (or x itself runs out of room).
constexpr double kRungFactor = 1.189207115002721;  // 2^(1/4)
constexpr double kMaxResolvedLog10 = 1e9;
constexpr double kMaxX = 1e300;

struct Rung {
  double f;
  double g;
  double d;
};

}  // namespace

Order asymptotic_compare(const Expr& f, const Expr& g) {
  std::vector<Rung> rungs;
  bool escaped_f = false;
  bool escaped_g = false;
  for (double x = kLog10Two; x <= kMaxX; x *= kRungFactor) {
    double fv = eval_node(f, x);
    double gv = eval_node(g, x);
    bool f_out = !std::isfinite(fv) || std::abs(fv) > kMaxResolvedLog10;
    bool g_out = !std::isfinite(gv) || std::abs(gv) > kMaxResolvedLog10;
    if (f_out || g_out) {
      escaped_f = f_out && fv > 0;
      escaped_g = g_out && gv > 0;
      break;
    }
    rungs.push_back({fv, gv, fv - gv});
  }

  if (rungs.size() < 3) {
    // Too few resolved rungs: only decisive when exactly one side blew up
    // while the other stayed modest.
    if (escaped_f && !escaped_g) return Order::Greater;
    if (escaped_g && !escaped_f) return Order::Less;
    throw InconclusiveComparison("expressions overflow before the comparison ladder resolves");
  }

  const Rung& a = rungs[rungs.size() - 3];
  const Rung& b = rungs[rungs.size() - 2];
  const Rung& c = rungs[rungs.size() - 1];
  double scale = std::max({std::abs(c.f), std::abs(c.g), 1.0});
  double tol = 1e-10 + 1e-13 * scale;
  double step1 = b.d - a.d;
  double step2 = c.d - b.d;

  bool rising = step1 > tol && step2 > tol;
  bool falling = step1 < -tol && step2 < -tol;
  bool flat = std::abs(step1) <= tol && std::abs(step2) <= tol;

  if (rising) return c.d > 0 ? Order::Greater : Order::Equal;
  if (falling) return c.d < 0 ? Order::Less : Order::Equal;
  if (flat) return Order::Equal;
  // A difference that settles onto a constant from one side can show one
  // sub-tolerance step; any move of at most the tolerance counts as settled.
  if (std::abs(step2) <= tol && std::abs(step1) <= 1e3 * tol) return Order::Equal;
  throw InconclusiveComparison("difference of logarithms has no stable trend on the ladder");
}

}  // namespace qx
