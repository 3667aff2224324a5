#pragma once

// Evaluates an expression in ordinary floating point at n (no log space).
// Logarithms read max(ln x, ln 2), the documented floor.

#include <algorithm>
#include <cmath>

#include "qx/expr.hpp"

namespace oracle {

inline long double direct_eval(const qx::Expr& e, long double n) {
  using qx::NodeKind;
  switch (e.kind()) {
    case NodeKind::Const:
      return static_cast<long double>(e.number().num()) / e.number().den();
    case NodeKind::Var:
      return n;
    case NodeKind::Log:
      return std::max(std::log(direct_eval(e.child(), n)), std::log(2.0L));
    case NodeKind::Exp:
      return std::exp(direct_eval(e.child(), n));
    case NodeKind::Pow: {
      long double q = static_cast<long double>(e.number().num()) / e.number().den();
      return std::pow(direct_eval(e.child(), n), q);
    }
    case NodeKind::Mul: {
      long double p = 1;
      for (const qx::Expr& f : e.children()) p *= direct_eval(f, n);
      return p;
    }
    case NodeKind::Add: {
      long double s = 0;
      for (const qx::Expr& t : e.children()) s += direct_eval(t, n);
      return s;
    }
  }
  return NAN;
}

}  // namespace oracle
