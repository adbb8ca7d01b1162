#include "vexil/decimal.hpp"

#include <stdexcept>

namespace vexil {

namespace {

// Largest e with 10^e <= a, for a > 0.
long decimal_exponent(const Rational& a) {
  long e = static_cast<long>(a.numerator().get_str().size()) -
           static_cast<long>(a.denominator().get_str().size());
  while (a < pow10(e)) --e;
  while (a >= pow10(e + 1)) ++e;
  return e;
}

mpz_class round_half_even(const Rational& v) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
  const mpz_class twice_rem = 2 * (v.numerator() - fl * v.denominator());
  const int c = cmp(twice_rem, v.denominator());
  if (c > 0 || (c == 0 && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
  return fl;
}

// digits * 10^exponent in positional notation, trailing zeros stripped.
std::string positional(const std::string& digits, long exponent, bool strip) {
  std::string out;
  if (exponent >= 0) {
    out = digits + std::string(static_cast<std::size_t>(exponent), '0');
    return out;
  }
  const auto frac = static_cast<std::size_t>(-exponent);
  std::string padded = digits;
  if (padded.size() <= frac) padded.insert(0, frac - padded.size() + 1, '0');
  out = padded.substr(0, padded.size() - frac) + "." + padded.substr(padded.size() - frac);
  if (strip) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

}  // namespace

std::string round_significant(const Rational& x, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (x.is_zero()) return "0";
  const Rational a = x.abs();
  long e = decimal_exponent(a);
  mpz_class q = round_half_even(a * pow10(digits - 1 - e));
  if (q == pow10(digits).numerator()) {
    q /= 10;
    ++e;
  }
  std::string out = positional(q.get_str(), e - digits + 1, true);
  return x.sign() == Sign::Negative ? "-" + out : out;
}

std::string truncate_fraction(const Rational& x, int fraction_digits) {
  if (fraction_digits < 0) throw std::invalid_argument("fraction_digits must be nonnegative");
  const Rational scaled = x.abs() * pow10(fraction_digits);
  mpz_class t;
  mpz_tdiv_q(t.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
  std::string out = positional(t.get_str(), -fraction_digits, false);
  if (fraction_digits == 0 && !out.empty() && out.back() == '.') out.pop_back();
  return x.sign() == Sign::Negative ? "-" + out : out;
}

}  // namespace vexil
