#include "vexil/identity.hpp"

#include "interval.hpp"
#include "vexil/errors.hpp"
#include "vexil/eval.hpp"

namespace vexil {

namespace {

constexpr int kMaxSquarings = 3;

std::optional<RadicalSum> square_times(std::optional<RadicalSum> v, int k) {
  for (int i = 0; i < k && v; ++i) v = v->mul(*v);
  return v;
}

}  // namespace

GoldenNumber gn_normalize(const Expr& x) {
  if (x.exact())
    if (auto g = x.exact()->as_golden()) return *g;
  throw NotInField("expression is not in Q(sqrt 5): " + x.to_string());
}

std::optional<RadicalSum> normalize_power(const Expr& x, int k) {
  if (k == 0) return x.exact();
  if (x.exact())
    if (auto v = square_times(x.exact(), k)) return v;
  switch (x.op()) {
    case Expr::Op::Sqrt: return normalize_power(x.operand(), k - 1);
    case Expr::Op::Neg: return normalize_power(x.operand(), k);
    case Expr::Op::Mul:
    case Expr::Op::Div: {
      auto a = normalize_power(x.lhs(), k);
      if (!a) return std::nullopt;
      auto b = normalize_power(x.rhs(), k);
      if (!b) return std::nullopt;
      return x.op() == Expr::Op::Mul ? a->mul(*b) : a->div(*b);
    }
    default: return std::nullopt;
  }
}

IdentityStatus verify_identity(const Expr& lhs, const Expr& rhs) {
  if (structurally_equal(lhs, rhs)) return IdentityStatus::ProvedEqual;
  const auto sl = try_certify_sign(lhs);
  const auto sr = try_certify_sign(rhs);
  if (!sl || !sr) return IdentityStatus::Undecided;
  if (*sl * *sr == Sign::Negative)
    throw SignMismatch("identity sides have opposite signs: " + lhs.to_string() + " vs " +
                       rhs.to_string());
  // With matching signs, x^(2^k) == y^(2^k) iff x == y.
  for (int k = 0; k <= kMaxSquarings; ++k) {
    auto a = normalize_power(lhs, k);
    if (!a) continue;
    auto b = normalize_power(rhs, k);
    if (!b) continue;
    if (auto diff = a->sub(*b))
      return diff->is_zero() ? IdentityStatus::ProvedEqual : IdentityStatus::ProvedUnequal;
  }
  for (long bits = kInitialBits; bits <= kRefinementCapBits; bits *= 2) {
    auto a = detail::evaluate(lhs, bits);
    auto b = detail::evaluate(rhs, bits);
    if (!a || !b) continue;
    if (a->to_ball().disjoint(b->to_ball())) return IdentityStatus::ProvedUnequal;
  }
  return IdentityStatus::Undecided;
}

}  // namespace vexil
