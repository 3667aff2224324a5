#include "qx/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qx {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  num_ = numerator;
  den_ = denominator;
}

Rational Rational::parse_decimal(std::string_view text) {
  std::size_t i = 0;
  Wide mantissa = 0;
  int scale = 0;  // power of ten applied to the mantissa
  bool digits = false;
  auto push_digit = [&](char c) {
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa > Wide(std::numeric_limits<std::int64_t>::max()) * 1000) {
      throw std::overflow_error("numeric literal too large");
    }
    digits = true;
  };
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) push_digit(text[i++]);
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      push_digit(text[i++]);
      --scale;
    }
  }
  if (!digits) throw std::invalid_argument("malformed number");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) sign = text[i++] == '-' ? -1 : 1;
    int exponent = 0;
    bool exp_digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = exponent * 10 + (text[i++] - '0');
      if (exponent > 40) throw std::overflow_error("numeric literal exponent too large");
      exp_digits = true;
    }
    if (!exp_digits) throw std::invalid_argument("malformed exponent");
    scale += sign * exponent;
  }
  if (i != text.size()) throw std::invalid_argument("malformed number");

  Wide den = 1;
  while (scale > 0) {
    mantissa *= 10;
    if (mantissa > Wide(std::numeric_limits<std::int64_t>::max()) * 1000) {
      throw std::overflow_error("numeric literal too large");
    }
    --scale;
  }
  while (scale < 0) {
    den *= 10;
    if (den > Wide(std::numeric_limits<std::int64_t>::max()) * 1000) {
      throw std::overflow_error("numeric literal too precise");
    }
    ++scale;
  }
  return make(mantissa, den);
}

double Rational::log10() const {
  if (num_ <= 0) return -std::numeric_limits<double>::infinity();
  return std::log10(static_cast<double>(num_)) - std::log10(static_cast<double>(den_));
}

bool Rational::renders_as_decimal() const {
  std::int64_t d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  if (!renders_as_decimal()) return std::to_string(num_) + "/" + std::to_string(den_);

  // den_ = 2^a 5^b: scale to a power of ten and print the fixed-point digits.
  Wide n = num_;
  Wide d = den_;
  int places = 0;
  while (d != 1) {
    if (d % 10 == 0) {
      d /= 10;
    } else if (d % 2 == 0) {
      d /= 2;
      n *= 5;
    } else {
      d /= 5;
      n *= 2;
    }
    ++places;
  }
  bool negative = n < 0;
  if (negative) n = -n;
  std::string digits;
  while (n > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
  digits.insert(digits.end() - places, '.');
  return negative ? "-" + digits : digits;
}

Rational Rational::operator-() const { return make(-Wide(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace qx
