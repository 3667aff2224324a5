#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace qx {

// A nonnegative quantity held as its base-10 logarithm, so values such as
// 10^434294 are ordinary values. Zero is log10 = -inf.
class LogMagnitude {
 public:
  constexpr LogMagnitude() = default;  // 1

  static constexpr LogMagnitude from_log10(double log10_value) { return LogMagnitude(log10_value); }
  // Throws std::domain_error for negative or NaN input.
  static LogMagnitude from_value(double value);
  static constexpr LogMagnitude zero() { return LogMagnitude(-std::numeric_limits<double>::infinity()); }

  constexpr double log10() const noexcept { return log10_; }
  // 10^log10; may be +inf when the magnitude exceeds double range.
  double value() const noexcept { return std::pow(10.0, log10_); }

  bool is_zero() const noexcept { return std::isinf(log10_) && log10_ < 0; }
  bool is_finite() const noexcept { return std::isfinite(log10_); }

  // Nearest integer to the value. Only permitted below 10^15; throws
  // std::domain_error otherwise.
  std::uint64_t to_integer() const;

  friend constexpr LogMagnitude operator*(LogMagnitude a, LogMagnitude b) { return LogMagnitude(a.log10_ + b.log10_); }
  friend constexpr LogMagnitude operator/(LogMagnitude a, LogMagnitude b) { return LogMagnitude(a.log10_ - b.log10_); }
  friend constexpr auto operator<=>(LogMagnitude a, LogMagnitude b) { return a.log10_ <=> b.log10_; }
  friend constexpr bool operator==(LogMagnitude a, LogMagnitude b) { return a.log10_ == b.log10_; }

  // Largest log10 for which integer conversion is allowed.
  static constexpr double kExactLimitLog10 = 15.0;

 private:
  constexpr explicit LogMagnitude(double log10_value) : log10_(log10_value) {}

  double log10_ = 0.0;
};

// Problem size: an exact integer below 10^15, otherwise a magnitude.
class ProblemSize {
 public:
  // Smallest representable size (the domain floor n = 2).
  ProblemSize() : exact_(2), log10_(std::log10(2.0)) {}

  // Throws std::domain_error if value < 2 or value >= 10^15.
  static ProblemSize exact(std::uint64_t value);
  static ProblemSize magnitude(LogMagnitude m);
  // Picks the representation from a continuous log10: ceil(10^x) when it is
  // below 10^15, else the magnitude itself. Values within 1e-9 relative of an
  // integer snap to it before the ceiling.
  static ProblemSize ceil_from_log10(double x);
  // Largest integer <= 10^x (with the same snapping), or the magnitude.
  static ProblemSize floor_from_log10(double x);

  bool is_exact() const noexcept { return exact_ != 0; }
  std::uint64_t exact_value() const;
  double log10() const noexcept { return log10_; }
  LogMagnitude as_magnitude() const noexcept { return LogMagnitude::from_log10(log10_); }

  friend bool operator==(const ProblemSize& a, const ProblemSize& b) {
    if (a.is_exact() != b.is_exact()) return false;
    return a.is_exact() ? a.exact_ == b.exact_ : a.log10_ == b.log10_;
  }
  friend std::partial_ordering operator<=>(const ProblemSize& a, const ProblemSize& b) {
    if (a.is_exact() && b.is_exact()) return a.exact_ <=> b.exact_;
    return a.log10_ <=> b.log10_;
  }

 private:
  std::uint64_t exact_ = 0;  // 0 means magnitude form
  double log10_ = 0.0;
};

}  // namespace qx
