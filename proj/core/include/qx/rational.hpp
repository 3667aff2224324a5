#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qx {

// Exact fraction with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  // Parses "2", "1.186", "1e6", "2.5e-3". Throws std::invalid_argument on
  // malformed text and std::overflow_error when the value does not fit.
  static Rational parse_decimal(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  // log10 of a positive value, computed without forming the quotient.
  double log10() const;

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_positive() const noexcept { return num_ > 0; }
  bool is_zero() const noexcept { return num_ == 0; }

  // Terminating decimals render as decimals ("0.5", "1.186"), everything else
  // as "p/q".
  std::string to_string() const;
  bool renders_as_decimal() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace qx
