#include "vexil/rational.hpp"

#include <cctype>

#include "vexil/errors.hpp"

namespace vexil {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<mpz_class> exact_isqrt(const mpz_class& v) {
  if (sgn(v) < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpz_class num, mpz_class den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

std::optional<Rational> Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return std::nullopt;
    mpz_class den(std::string(q), 10);
    if (den == 0) return std::nullopt;
    out = Rational(mpz_class(std::string(p), 10), den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto ip = text.substr(0, dot), fp = text.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) return std::nullopt;
    mpz_class num(std::string(ip) + std::string(fp), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    out = Rational(num, den);
  } else {
    if (!all_digits(text)) return std::nullopt;
    out = Rational(mpz_class(std::string(text), 10), mpz_class(1));
  }
  return negative ? -out : out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / q_);
}

std::optional<Rational> Rational::sqrt() const {
  auto n = exact_isqrt(numerator());
  auto d = exact_isqrt(denominator());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

}  // namespace vexil
