#pragma once

// Reference computations that share no code with the library: direct
// floating-point evaluation, closed-form natural logs of runtime families,
// a brute-force integer threshold scan and textbook least squares.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using LnFn = std::function<long double(long double)>;  // n -> ln f(n)

// Runtime families with their natural logs written out by hand.
inline LnFn ln_power(long double a) {
  return [a](long double n) { return a * std::log(n); };
}
inline LnFn ln_power_log(long double a) {
  return [a](long double n) { return a * std::log(n) + std::log(std::log(n)); };
}
inline LnFn ln_log() {
  return [](long double n) { return std::log(std::log(n)); };
}
inline LnFn ln_exp(long double c) {
  return [c](long double n) { return c * n; };
}
inline LnFn ln_power_loglog(long double a) {  // n^a log n log log n
  return [a](long double n) {
    long double l = std::log(n);
    return a * std::log(n) + std::log(l) + std::log(std::max(std::log(l), std::log(2.0L)));
  };
}

// Smallest integer m >= 2 such that f(n) >= C g(n) at every sampled n in
// [m, 10m]: all integers up to m + 64, then 256 geometric samples. A failing
// sample n rules out every m' <= n, so the scan jumps past it. Returns
// nullopt if no m <= limit qualifies.
inline std::optional<std::uint64_t> integer_scan_threshold(const LnFn& f, const LnFn& g, long double ln_c,
                                                           std::uint64_t limit) {
  auto ok = [&](long double n) { return f(n) - ln_c - g(n) >= 0; };
  std::uint64_t m = 2;
  while (m <= limit) {
    std::optional<long double> worst;
    for (std::uint64_t n = m; n <= m + 64 && n <= 10 * m; ++n) {
      if (!ok(static_cast<long double>(n))) worst = static_cast<long double>(n);
    }
    const long double lo = static_cast<long double>(m);
    const long double ratio = std::pow(10.0L, 1.0L / 256);
    long double n = lo;
    for (int i = 0; i <= 256; ++i, n *= ratio) {
      long double k = std::floor(n);
      if (k >= lo && !ok(k)) worst = std::max(worst.value_or(0), k);
    }
    if (!worst) return m;
    m = static_cast<std::uint64_t>(*worst) + 1;
  }
  return std::nullopt;
}

// ceil(C^(1/(a-b))) with float noise at integers removed.
inline std::uint64_t power_law_threshold(long double c, long double a, long double b) {
  long double v = std::pow(c, 1.0L / (a - b));
  long double r = std::round(v);
  if (std::fabs(v - r) <= 1e-9L * v) v = r;
  return std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(v)));
}

struct Line {
  long double intercept;  // at x = x0
  long double slope;
  long double r_squared;
};

// Normal equations on raw sums, in long double, with x measured from x0.
inline Line least_squares(const std::vector<std::pair<long double, long double>>& pts, long double x0) {
  long double n = pts.size(), sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (auto [x, y] : pts) {
    x -= x0;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  long double intercept = (sy - slope * sx) / n;
  long double ss_tot = syy - sy * sy / n;
  long double ss_res = 0;
  for (auto [x, y] : pts) {
    long double e = y - (intercept + slope * (x - x0));
    ss_res += e * e;
  }
  return {intercept, slope, ss_tot == 0 ? 1.0L : 1 - ss_res / ss_tot};
}

}  // namespace oracle
