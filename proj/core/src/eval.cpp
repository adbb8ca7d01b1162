#include "vexil/eval.hpp"

#include <algorithm>
#include <stdexcept>

#include "interval.hpp"
#include "vexil/decimal.hpp"
#include "vexil/errors.hpp"
#include "vexil/identity.hpp"

namespace vexil {

namespace {

Rational pow2(long exponent) {
  mpz_class p = 1;
  p <<= static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

std::optional<Rational> exact_rational(const Expr& x) {
  if (!x.exact()) return std::nullopt;
  auto g = x.exact()->as_golden();
  if (!g || !g->is_rational()) return std::nullopt;
  return g->rational_part();
}

}  // namespace

Ball expr_eval(const Expr& x, int precision_bits) {
  if (precision_bits < 1) throw std::invalid_argument("precision_bits must be positive");
  const long cap = std::max<long>(kRefinementCapBits, 4L * precision_bits);
  const Rational tolerance = pow2(-precision_bits);
  for (long bits = std::max(kInitialBits, precision_bits + 16); bits <= cap; bits *= 2) {
    auto iv = detail::evaluate(x, bits);
    if (!iv) continue;
    Ball ball = iv->to_ball();
    const Rational mag = std::max(Rational(1), ball.center().to_rational().abs());
    if (ball.radius().to_rational() <= tolerance * mag) return ball;
  }
  throw PrecisionExhausted("enclosure did not reach " + std::to_string(precision_bits) +
                           " bits within the refinement cap");
}

std::optional<Sign> try_certify_sign(const Expr& x) {
  if (x.exact()) {
    if (auto s = x.exact()->sign()) return s;
  } else {
    // x^(2^k) == 0 iff x == 0, which intervals alone can never certify.
    for (int k = 1; k <= 3; ++k) {
      if (auto p = normalize_power(x, k)) {
        if (p->is_zero()) return Sign::Zero;
        break;
      }
    }
  }
  for (long bits = kInitialBits; bits <= kRefinementCapBits; bits *= 2) {
    auto iv = detail::evaluate(x, bits);
    if (!iv) continue;
    if (iv->positive()) return Sign::Positive;
    if (iv->negative()) return Sign::Negative;
    if (iv->lo.is_zero() && iv->hi.is_zero()) return Sign::Zero;
  }
  return std::nullopt;
}

Sign certify_sign(const Expr& x) {
  if (auto s = try_certify_sign(x)) return *s;
  throw PrecisionExhausted("cannot certify the sign of " + x.to_string());
}

std::string to_decimal(const Expr& x, int digits, int initial_bits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (auto q = exact_rational(x)) return round_significant(*q, digits);
  const long cap = std::max<long>(kRefinementCapBits, 8L * digits);
  for (long bits = std::max(initial_bits, kInitialBits); bits <= cap; bits *= 2) {
    auto iv = detail::evaluate(x, bits);
    if (!iv) continue;
    if (auto s = iv->to_ball().to_decimal(digits)) return *s;
  }
  throw PrecisionExhausted("cannot certify " + std::to_string(digits) + " digits of " +
                           x.to_string());
}

std::string truncate_decimal(const Expr& x, int fraction_digits) {
  if (auto q = exact_rational(x)) return truncate_fraction(*q, fraction_digits);
  const long cap = std::max<long>(kRefinementCapBits, 8L * fraction_digits);
  for (long bits = kInitialBits; bits <= cap; bits *= 2) {
    auto iv = detail::evaluate(x, bits);
    if (!iv) continue;
    const std::string lo = truncate_fraction(iv->lo.to_rational(), fraction_digits);
    if (lo == truncate_fraction(iv->hi.to_rational(), fraction_digits)) return lo;
  }
  throw PrecisionExhausted("cannot certify truncation of " + x.to_string());
}

}  // namespace vexil
