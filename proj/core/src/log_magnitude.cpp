#include "qx/log_magnitude.hpp"

#include <stdexcept>

namespace qx {

namespace {

constexpr double kSnapRelative = 1e-9;
constexpr double kExactCeiling = 1e15;

}  // namespace

LogMagnitude LogMagnitude::from_value(double value) {
  if (std::isnan(value) || value < 0.0) throw std::domain_error("magnitude must be nonnegative");
  if (value == 0.0) return zero();
  return LogMagnitude(std::log10(value));
}

std::uint64_t LogMagnitude::to_integer() const {
  if (is_zero()) return 0;
  if (!(log10_ < kExactLimitLog10)) {
    throw std::domain_error("magnitude 10^" + std::to_string(log10_) + " is too large for an exact integer");
  }
  return static_cast<std::uint64_t>(std::llround(value()));
}

ProblemSize ProblemSize::exact(std::uint64_t value) {
  if (value < 2) throw std::domain_error("problem size must be at least 2");
  if (static_cast<double>(value) >= kExactCeiling) throw std::domain_error("exact problem size must be below 10^15");
  ProblemSize p;
  p.exact_ = value;
  p.log10_ = std::log10(static_cast<double>(value));
  return p;
}

ProblemSize ProblemSize::magnitude(LogMagnitude m) {
  if (!(m.log10() >= std::log10(2.0))) throw std::domain_error("problem size must be at least 2");
  ProblemSize p;
  p.exact_ = 0;
  p.log10_ = m.log10();
  return p;
}

ProblemSize ProblemSize::ceil_from_log10(double x) {
  if (std::isnan(x)) throw std::domain_error("problem size is NaN");
  if (x < std::log10(2.0)) return exact(2);
  if (x >= LogMagnitude::kExactLimitLog10) return magnitude(LogMagnitude::from_log10(x));
  double v = std::pow(10.0, x);
  double nearest = std::round(v);
  double n = std::abs(v - nearest) <= kSnapRelative * v ? nearest : std::ceil(v);
  if (n >= kExactCeiling) return magnitude(LogMagnitude::from_log10(std::log10(n)));
  return exact(static_cast<std::uint64_t>(std::max(n, 2.0)));
}

ProblemSize ProblemSize::floor_from_log10(double x) {
  if (std::isnan(x) || x < std::log10(2.0) - 1e-12) throw std::domain_error("problem size below 2");
  if (x >= LogMagnitude::kExactLimitLog10) return magnitude(LogMagnitude::from_log10(x));
  double v = std::pow(10.0, x);
  double nearest = std::round(v);
  double n = std::abs(v - nearest) <= kSnapRelative * v ? nearest : std::floor(v);
  if (n >= kExactCeiling) return magnitude(LogMagnitude::from_log10(std::log10(n)));
  return exact(static_cast<std::uint64_t>(std::max(n, 2.0)));
}

std::uint64_t ProblemSize::exact_value() const {
  if (!is_exact()) throw std::domain_error("problem size is only known as a magnitude");
  return exact_;
}

}  // namespace qx
