#include "vexil/golden.hpp"

#include <cmath>

#include "vexil/errors.hpp"

namespace vexil {

Sign GoldenNumber::sign() const {
  const Sign sa = a_.sign(), sb = b_.sign();
  if (sb == Sign::Zero) return sa;
  if (sa == Sign::Zero || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins. a^2 == 5 b^2 has no
  // nonzero rational solution, so the comparison is strict.
  const Rational a2 = a_ * a_;
  const Rational b2x5 = Rational(5) * b_ * b_;
  return a2 > b2x5 ? sa : sb;
}

GoldenNumber GoldenNumber::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return {a_ / n, -b_ / n};
}

std::optional<GoldenNumber> GoldenNumber::sqrt() const {
  const Sign s = sign();
  if (s == Sign::Negative) return std::nullopt;
  if (s == Sign::Zero) return GoldenNumber{};
  if (b_.is_zero()) {
    if (auto r = a_.sqrt()) return GoldenNumber(*r);
    if (auto r = (a_ / Rational(5)).sqrt()) return GoldenNumber(Rational(0), *r);
    return std::nullopt;
  }
  // (c + d sqrt5)^2 = c^2 + 5 d^2 + 2 c d sqrt5, so c^2 = (a +- m) / 2
  // with m = sqrt(a^2 - 5 b^2).
  const auto m = norm().sqrt();
  if (!m) return std::nullopt;
  for (const Rational& c2 : {(a_ + *m) / Rational(2), (a_ - *m) / Rational(2)}) {
    if (c2.sign() != Sign::Positive) continue;
    const auto c = c2.sqrt();
    if (!c) continue;
    GoldenNumber root(*c, b_ / (Rational(2) * *c));
    if (root * root != *this) continue;
    return root.abs();
  }
  return std::nullopt;
}

double GoldenNumber::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(5.0);
}

std::string GoldenNumber::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string() + (b_.sign() == Sign::Negative ? " - " : " + ");
  else if (b_.sign() == Sign::Negative) out = "-";
  const Rational mag = b_.abs();
  if (mag != Rational(1)) out += mag.to_string() + "*";
  return out + "sqrt(5)";
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o) {
  return *this *= o.inverse();
}

GoldenNumber gn_arith(FieldOp op, const GoldenNumber& x, const GoldenNumber& y) {
  switch (op) {
    case FieldOp::Add: return x + y;
    case FieldOp::Sub: return x - y;
    case FieldOp::Mul: return x * y;
    case FieldOp::Div: return x / y;
  }
  return {};
}

}  // namespace vexil
