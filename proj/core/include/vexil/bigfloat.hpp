#pragma once

#include <string>
#include <utility>

#include <mpfr.h>

#include "vexil/rational.hpp"

namespace vexil {

/// Owning wrapper around an MPFR binary float. Every arithmetic helper
/// takes an explicit rounding direction; nothing rounds implicitly.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept : BigFloat(MPFR_PREC_MIN) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_rational(const Rational& q, mpfr_prec_t bits, mpfr_rnd_t rnd) {
    BigFloat out(bits);
    mpfr_set_q(out.v_, q.raw().get_mpq_t(), rnd);
    return out;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  /// The exact binary value as a rational.
  Rational to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return Rational(q);
  }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

}  // namespace vexil
