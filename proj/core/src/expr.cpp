#include "qx/expr.hpp"

#include <stdexcept>

namespace qx {

Expr Expr::constant(Rational value) {
  if (!value.is_positive()) throw std::invalid_argument("constants must be strictly positive");
  return Expr(std::make_shared<const Node>(Node{NodeKind::Const, value, {}}));
}

Expr Expr::var() {
  static const Expr v(std::make_shared<const Node>(Node{NodeKind::Var, Rational(), {}}));
  return v;
}

Expr Expr::log(Expr child) {
  return Expr(std::make_shared<const Node>(Node{NodeKind::Log, Rational(), {std::move(child)}}));
}

Expr Expr::exp(Expr child) {
  return Expr(std::make_shared<const Node>(Node{NodeKind::Exp, Rational(), {std::move(child)}}));
}

Expr Expr::pow(Expr base, Rational exponent) {
  return Expr(std::make_shared<const Node>(Node{NodeKind::Pow, exponent, {std::move(base)}}));
}

Expr Expr::mul(std::vector<Expr> factors) {
  if (factors.size() < 2) throw std::invalid_argument("Mul needs at least two factors");
  return Expr(std::make_shared<const Node>(Node{NodeKind::Mul, Rational(), std::move(factors)}));
}

Expr Expr::add(std::vector<Expr> terms) {
  if (terms.size() < 2) throw std::invalid_argument("Add needs at least two terms");
  return Expr(std::make_shared<const Node>(Node{NodeKind::Add, Rational(), std::move(terms)}));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.number() != b.number()) return false;
  auto ca = a.children();
  auto cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(ca[i] == cb[i])) return false;
  }
  return true;
}

namespace {

std::string render_const(const Rational& q) {
  return q.renders_as_decimal() ? q.to_string() : "(" + q.to_string() + ")";
}

std::string render_exponent(const Rational& q) {
  if (q.is_integer() && q.num() >= 0) return q.to_string();
  return "(" + q.to_string() + ")";
}

std::string render_node(const Expr& e);

std::string render_grouped(const Expr& e, bool group) {
  std::string s = render_node(e);
  return group ? "(" + s + ")" : s;
}

std::string render_node(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Const:
      return render_const(e.number());
    case NodeKind::Var:
      return "n";
    case NodeKind::Log:
      return "log(" + render_node(e.child()) + ")";
    case NodeKind::Exp:
      return "exp(" + render_node(e.child()) + ")";
    case NodeKind::Pow: {
      NodeKind b = e.child().kind();
      bool group = b == NodeKind::Pow || b == NodeKind::Mul || b == NodeKind::Add;
      return render_grouped(e.child(), group) + "^" + render_exponent(e.number());
    }
    case NodeKind::Mul: {
      std::string out;
      for (const Expr& f : e.children()) {
        if (!out.empty()) out += " * ";
        out += render_grouped(f, f.kind() == NodeKind::Mul || f.kind() == NodeKind::Add);
      }
      return out;
    }
    case NodeKind::Add: {
      std::string out;
      for (const Expr& t : e.children()) {
        if (!out.empty()) out += " + ";
        out += render_grouped(t, t.kind() == NodeKind::Add);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string render(const Expr& e) { return render_node(e); }

std::optional<PowerLaw> as_power_law(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Const:
      return PowerLaw{e.number().log10(), Rational(0)};
    case NodeKind::Var:
      return PowerLaw{0.0, Rational(1)};
    case NodeKind::Pow: {
      auto base = as_power_law(e.child());
      if (!base) return std::nullopt;
      return PowerLaw{base->log10_coefficient * e.number().to_double(), base->exponent * e.number()};
    }
    case NodeKind::Mul: {
      PowerLaw acc;
      for (const Expr& f : e.children()) {
        auto p = as_power_law(f);
        if (!p) return std::nullopt;
        acc.log10_coefficient += p->log10_coefficient;
        acc.exponent = acc.exponent + p->exponent;
      }
      return acc;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace qx
