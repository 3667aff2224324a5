#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qx/log_magnitude.hpp"
#include "qx/rational.hpp"

namespace qx {

enum class NodeKind { Const, Var, Log, Exp, Pow, Mul, Add };

// Immutable asymptotic complexity expression in the single variable n.
// Copies share structure; equality is structural.
//
//   Const(q)      positive rational constant
//   Var           the problem size n
//   Log(e)        natural logarithm
//   Exp(e)        natural exponential
//   Pow(e, q)     e^q with rational q
//   Mul(e...)     product of two or more factors
//   Add(e...)     sum of two or more terms
class Expr {
 public:
  static Expr constant(Rational value);
  static Expr var();
  static Expr log(Expr child);
  static Expr exp(Expr child);
  static Expr pow(Expr base, Rational exponent);
  static Expr mul(std::vector<Expr> factors);
  static Expr add(std::vector<Expr> terms);

  NodeKind kind() const noexcept { return node_->kind; }
  // Const value or Pow exponent.
  const Rational& number() const noexcept { return node_->number; }
  // Child of Log/Exp, base of Pow.
  const Expr& child() const { return node_->children.front(); }
  std::span<const Expr> children() const noexcept { return node_->children; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    NodeKind kind;
    Rational number;
    std::vector<Expr> children;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Canonical text; parse(render(e)) == e.
std::string render(const Expr& e);

// Grammar:
//   sum     := product ('+' product)*
//   product := unary (('*' | '/')? unary)*        juxtaposition multiplies
//   unary   := ('log' | 'exp' | 'sqrt') ('^' exponent)? (call | unary)
//            | postfix
//   postfix := primary ('^' exponent)*
//   primary := number | 'n' | '(' sum ')'
//   exponent:= '-'? number ('/' number)? | '(' '-'? number ('/' number)? ')'
//
// `log E` without parentheses takes the following power term, so
// "log n^2" is log(n^2) while "log(n)^2" is (log n)^2; "log^2 n" is (log n)^2.
// Division by a constant folds into the constant; division by anything else
// becomes a -1 power. Throws SyntaxError or NonPositiveConstant.
Expr parse(std::string_view text);

// log10 of the expression at n = 10^x. Logarithms saturate at ln 2, the value
// of log n at the domain floor, so nested logarithms stay positive for all
// n >= 2. Throws DomainError when x < log10(2). May return +inf when the value
// exceeds double range.
LogMagnitude eval_log10(const Expr& e, double x);

enum class Order { Less, Equal, Greater };

std::string to_string(Order o);

// Sign of lim log f(n) - log g(n), estimated on a geometric ladder of x.
// Throws InconclusiveComparison when the ladder gives no stable verdict.
Order asymptotic_compare(const Expr& f, const Expr& g);

// Coefficient and exponent of a pure power law c * n^a, if the expression
// is one (products and powers of constants and n only).
struct PowerLaw {
  double log10_coefficient = 0.0;
  Rational exponent;
};
std::optional<PowerLaw> as_power_law(const Expr& e);

}  // namespace qx
