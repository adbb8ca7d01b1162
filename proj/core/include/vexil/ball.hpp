#pragma once

#include <optional>
#include <string>

#include "vexil/bigfloat.hpp"
#include "vexil/golden.hpp"
#include "vexil/rational.hpp"

namespace vexil {

/// Rigorous enclosure center +- radius. The exact value it stands for is
/// guaranteed to lie in [center - radius, center + radius].
class Ball {
 public:
  Ball(BigFloat center, BigFloat radius) : center_(std::move(center)), radius_(std::move(radius)) {}

  const BigFloat& center() const { return center_; }
  const BigFloat& radius() const { return radius_; }

  /// Exact endpoints of the enclosure.
  Rational lower() const { return center_.to_rational() - radius_.to_rational(); }
  Rational upper() const { return center_.to_rational() + radius_.to_rational(); }

  bool contains(const Rational& q) const { return lower() <= q && q <= upper(); }
  bool contains(const GoldenNumber& g) const;
  bool contains_zero() const { return contains(Rational(0)); }
  bool disjoint(const Ball& o) const { return upper() < o.lower() || o.upper() < lower(); }

  /// Round-half-even to `digits` significant decimal digits, provided the
  /// whole enclosure rounds to the same string; nullopt otherwise.
  std::optional<std::string> to_decimal(int digits) const;

  double to_double() const { return center_.to_double(); }

 private:
  BigFloat center_;
  BigFloat radius_;
};

}  // namespace vexil
