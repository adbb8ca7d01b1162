#pragma once

#include <optional>

#include "vexil/ball.hpp"
#include "vexil/bigfloat.hpp"
#include "vexil/expr.hpp"

namespace vexil::detail {

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Interval {
  BigFloat lo;
  BigFloat hi;

  bool positive() const { return lo.sign() > 0; }
  bool negative() const { return hi.sign() < 0; }
  Ball to_ball() const;
};

/// Evaluates every node at `bits` of working precision. Returns nullopt
/// when some divisor enclosure still contains zero at this precision.
std::optional<Interval> evaluate(const Expr& x, mpfr_prec_t bits);

}  // namespace vexil::detail
