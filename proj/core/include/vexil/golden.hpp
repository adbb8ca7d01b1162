#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "vexil/rational.hpp"
#include "vexil/sign.hpp"

namespace vexil {

/// Element a + b*sqrt(5) of the quadratic field Q(sqrt 5).
///
/// The pair (a, b) is unique for each field element, so equality is
/// componentwise. Every golden-section quantity (phi, 1/phi, phi^2, ...)
/// lives here exactly.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  GoldenNumber(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
  GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenNumber phi() { return {Rational(1, 2), Rational(1, 2)}; }
  static GoldenNumber sqrt5() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// a - b*sqrt(5)
  GoldenNumber conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5 b^2 (product with the conjugate).
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

  Sign sign() const;
  GoldenNumber abs() const { return sign() == Sign::Negative ? -*this : *this; }
  GoldenNumber inverse() const;

  /// Nonnegative square root inside the field, if one exists. Requires a
  /// nonnegative argument; negative inputs yield nullopt.
  std::optional<GoldenNumber> sqrt() const;

  double to_double() const;
  /// Infix rendering, e.g. "3/2 + 1/2*sqrt(5)".
  std::string to_string() const;

  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);
  GoldenNumber& operator/=(const GoldenNumber& o);

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
  friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) = default;

  friend std::ostream& operator<<(std::ostream& os, const GoldenNumber& g) {
    return os << g.to_string();
  }

 private:
  Rational a_;
  Rational b_;
};

enum class FieldOp { Add, Sub, Mul, Div };

/// Field arithmetic; Div throws DivisionByZero for a zero divisor.
GoldenNumber gn_arith(FieldOp op, const GoldenNumber& x, const GoldenNumber& y);

/// Exact sign of a + b*sqrt(5), decided by comparing a^2 with 5 b^2.
inline Sign gn_sign(const GoldenNumber& x) { return x.sign(); }

}  // namespace vexil
