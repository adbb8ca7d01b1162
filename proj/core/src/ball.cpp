#include "vexil/ball.hpp"

#include <memory>

#include "vexil/decimal.hpp"

namespace vexil {

std::string BigFloat::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, v_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return raw ? std::string(raw) : std::string();
}

bool Ball::contains(const GoldenNumber& g) const {
  return (g - GoldenNumber(lower())).sign() != Sign::Negative &&
         (GoldenNumber(upper()) - g).sign() != Sign::Negative;
}

std::optional<std::string> Ball::to_decimal(int digits) const {
  // Rounding is monotone, so agreement at both ends covers the interior.
  std::string lo = round_significant(lower(), digits);
  if (lo != round_significant(upper(), digits)) return std::nullopt;
  return lo;
}

}  // namespace vexil
