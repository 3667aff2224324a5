#include <cctype>
#include <stdexcept>

#include "qx/errors.hpp"
#include "qx/expr.hpp"

namespace qx {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_ws();
    if (at_end()) throw SyntaxError("empty expression", pos_);
    Expr e = parse_sum();
    skip_ws();
    if (!at_end()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (at_end()) throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string_view peek_word() const {
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    return text_.substr(pos_, end - pos_);
  }

  bool starts_unary() {
    skip_ws();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Expr parse_sum() {
    std::vector<Expr> terms{parse_product()};
    while (consume('+')) terms.push_back(parse_product());
    return terms.size() == 1 ? terms.front() : Expr::add(std::move(terms));
  }

  Expr parse_product() {
    std::vector<Expr> factors{parse_unary()};
    for (;;) {
      skip_ws();
      if (consume('*')) {
        factors.push_back(parse_unary());
      } else if (peek() == '/') {
        ++pos_;
        Expr divisor = parse_unary();
        if (divisor.kind() == NodeKind::Const) {
          Expr& prev = factors.back();
          if (prev.kind() == NodeKind::Const) {
            prev = Expr::constant(prev.number() / divisor.number());
          } else {
            factors.push_back(Expr::constant(Rational(1) / divisor.number()));
          }
        } else {
          factors.push_back(Expr::pow(divisor, Rational(-1)));
        }
      } else if (starts_unary()) {
        factors.push_back(parse_unary());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors.front() : Expr::mul(std::move(factors));
  }

  Expr parse_unary() {
    skip_ws();
    std::string_view word = peek_word();
    if (word == "log" || word == "ln" || word == "exp" || word == "sqrt") {
      pos_ += word.size();
      std::optional<Rational> outer_power;
      if (consume('^')) outer_power = parse_exponent();
      skip_ws();
      Expr node = Expr::var();
      if (peek() == '(') {
        ++pos_;
        Expr inner = parse_sum();
        expect(')');
        node = apply_function(word, inner);
        if (outer_power) node = Expr::pow(node, *outer_power);
        return parse_postfix_tail(node);
      }
      if (at_end()) throw SyntaxError(std::string(word) + " needs an argument", pos_);
      if (!starts_unary()) throw SyntaxError(std::string(word) + " needs an argument", pos_);
      node = apply_function(word, parse_unary());
      if (outer_power) node = Expr::pow(node, *outer_power);
      return node;
    }
    return parse_postfix_tail(parse_primary());
  }

  static Expr apply_function(std::string_view word, Expr arg) {
    if (word == "exp") return Expr::exp(std::move(arg));
    if (word == "sqrt") return Expr::pow(std::move(arg), Rational(1, 2));
    return Expr::log(std::move(arg));
  }

  Expr parse_postfix_tail(Expr base) {
    while (consume('^')) base = Expr::pow(base, parse_exponent());
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (at_end()) throw SyntaxError("unexpected end of input", pos_);
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t at = pos_;
      Rational value = parse_number();
      if (!value.is_positive()) throw NonPositiveConstant("constants must be strictly positive", at);
      return Expr::constant(value);
    }
    if (c == '-') throw NonPositiveConstant("negative constants are not allowed", pos_);
    std::string_view word = peek_word();
    if (word == "n" || word == "N") {
      pos_ += 1;
      return Expr::var();
    }
    if (!word.empty()) throw SyntaxError("unknown identifier '" + std::string(word) + "'", pos_);
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  Rational parse_number() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    // Scientific suffix only when a digit follows, so "2exp(n)" stays 2 * exp(n).
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    if (pos_ == start) throw SyntaxError("expected a number", pos_);
    try {
      return Rational::parse_decimal(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      throw SyntaxError("malformed number", start);
    } catch (const std::overflow_error&) {
      throw SyntaxError("number out of range", start);
    }
  }

  Rational parse_signed_fraction() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    Rational q = parse_number();
    if (consume('/')) {
      std::size_t at = pos_;
      Rational d = parse_number();
      if (d.is_zero()) throw SyntaxError("zero denominator in exponent", at);
      q = q / d;
    }
    return negative ? -q : q;
  }

  Rational parse_exponent() {
    skip_ws();
    if (at_end()) throw SyntaxError("missing exponent", pos_);
    if (peek() == '(') {
      ++pos_;
      Rational q = parse_signed_fraction();
      expect(')');
      return q;
    }
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.') {
      throw SyntaxError("exponent must be a rational number", pos_);
    }
    Rational q = parse_number();
    return negative ? -q : q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace qx
