#include "interval.hpp"

#include <array>
#include <unordered_map>

namespace vexil::detail {

namespace {

using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat apply(BinaryFn fn, const BigFloat& a, const BigFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  BigFloat out(bits);
  fn(out.get(), a.get(), b.get(), rnd);
  return out;
}

// Hull of fn over the four endpoint combinations, rounded outward.
Interval corners(BinaryFn fn, const Interval& x, const Interval& y, mpfr_prec_t bits) {
  const std::array<const BigFloat*, 2> xs{&x.lo, &x.hi};
  const std::array<const BigFloat*, 2> ys{&y.lo, &y.hi};
  std::optional<BigFloat> lo, hi;
  for (const BigFloat* a : xs) {
    for (const BigFloat* b : ys) {
      BigFloat d = apply(fn, *a, *b, bits, MPFR_RNDD);
      BigFloat u = apply(fn, *a, *b, bits, MPFR_RNDU);
      if (!lo || compare(d, *lo) < 0) lo = std::move(d);
      if (!hi || compare(u, *hi) > 0) hi = std::move(u);
    }
  }
  return {std::move(*lo), std::move(*hi)};
}

class Evaluator {
 public:
  explicit Evaluator(mpfr_prec_t bits) : bits_(bits) {}

  std::optional<Interval> run(const Expr& x) {
    if (auto it = memo_.find(x.id()); it != memo_.end()) return it->second;
    auto result = compute(x);
    if (result) memo_.emplace(x.id(), *result);
    return result;
  }

 private:
  std::optional<Interval> compute(const Expr& x) {
    using Op = Expr::Op;
    if (x.op() == Op::Literal) {
      return Interval{BigFloat::from_rational(x.literal(), bits_, MPFR_RNDD),
                      BigFloat::from_rational(x.literal(), bits_, MPFR_RNDU)};
    }
    auto a = run(x.lhs());
    if (!a) return std::nullopt;
    switch (x.op()) {
      case Op::Neg: {
        Interval out{BigFloat(bits_), BigFloat(bits_)};
        mpfr_neg(out.lo.get(), a->hi.get(), MPFR_RNDD);
        mpfr_neg(out.hi.get(), a->lo.get(), MPFR_RNDU);
        return out;
      }
      case Op::Sqrt: {
        // The radicand was certified >= 0 at construction, so a negative
        // lower endpoint is enclosure slack and clamps to zero.
        if (a->hi.sign() < 0) return std::nullopt;
        Interval out{BigFloat(bits_), BigFloat(bits_)};
        if (a->lo.sign() > 0) mpfr_sqrt(out.lo.get(), a->lo.get(), MPFR_RNDD);
        mpfr_sqrt(out.hi.get(), a->hi.get(), MPFR_RNDU);
        return out;
      }
      default: break;
    }
    auto b = run(x.rhs());
    if (!b) return std::nullopt;
    switch (x.op()) {
      case Op::Add: return Interval{apply(mpfr_add, a->lo, b->lo, bits_, MPFR_RNDD),
                                    apply(mpfr_add, a->hi, b->hi, bits_, MPFR_RNDU)};
      case Op::Sub: return Interval{apply(mpfr_sub, a->lo, b->hi, bits_, MPFR_RNDD),
                                    apply(mpfr_sub, a->hi, b->lo, bits_, MPFR_RNDU)};
      case Op::Mul: return corners(mpfr_mul, *a, *b, bits_);
      case Op::Div:
        if (b->lo.sign() <= 0 && b->hi.sign() >= 0) return std::nullopt;
        return corners(mpfr_div, *a, *b, bits_);
      default: return std::nullopt;
    }
  }

  mpfr_prec_t bits_;
  std::unordered_map<const void*, Interval> memo_;
};

}  // namespace

Ball Interval::to_ball() const {
  const mpfr_prec_t bits = std::max(lo.precision(), hi.precision());
  BigFloat center(bits), radius(bits), tmp(bits);
  mpfr_add(center.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(center.get(), center.get(), 1, MPFR_RNDN);
  mpfr_sub(radius.get(), hi.get(), center.get(), MPFR_RNDU);
  mpfr_sub(tmp.get(), center.get(), lo.get(), MPFR_RNDU);
  if (compare(tmp, radius) > 0) radius = tmp;
  if (radius.sign() < 0) mpfr_set_zero(radius.get(), 1);
  return Ball(std::move(center), std::move(radius));
}

std::optional<Interval> evaluate(const Expr& x, mpfr_prec_t bits) {
  Evaluator ev(bits);
  return ev.run(x);
}

}  // namespace vexil::detail
