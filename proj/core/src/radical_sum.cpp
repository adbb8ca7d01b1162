#include "vexil/radical_sum.hpp"

namespace vexil {

namespace {
const GoldenNumber kOne(1);
}

RadicalSum::RadicalSum(GoldenNumber g) {
  if (!g.is_zero()) terms_.push_back({std::move(g), kOne});
}

std::optional<RadicalSum> RadicalSum::term(const GoldenNumber& coeff, const GoldenNumber& radicand) {
  if (radicand.sign() == Sign::Negative) return std::nullopt;
  RadicalSum out;
  if (radicand.is_zero()) return out;
  if (!out.merge(coeff, radicand)) return std::nullopt;
  return out;
}

bool RadicalSum::merge(const GoldenNumber& coeff, const GoldenNumber& radicand) {
  if (coeff.is_zero()) return true;
  if (auto root = radicand.sqrt()) {
    const GoldenNumber c = coeff * *root;
    if (!terms_.empty() && terms_.front().radicand == kOne) {
      terms_.front().coeff += c;
      if (terms_.front().coeff.is_zero()) terms_.erase(terms_.begin());
    } else {
      terms_.insert(terms_.begin(), Term{c, kOne});
    }
    return true;
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->radicand == kOne) continue;
    // sqrt(radicand) = q * sqrt(it->radicand) when the ratio is a square.
    if (auto q = (radicand / it->radicand).sqrt()) {
      it->coeff += coeff * *q;
      if (it->coeff.is_zero()) terms_.erase(it);
      return true;
    }
  }
  terms_.push_back({coeff, radicand});
  return terms_.size() <= kMaxTerms;
}

std::optional<GoldenNumber> RadicalSum::as_golden() const {
  if (terms_.empty()) return GoldenNumber{};
  if (terms_.size() == 1 && terms_.front().radicand == kOne) return terms_.front().coeff;
  return std::nullopt;
}

std::optional<Sign> RadicalSum::sign() const {
  switch (terms_.size()) {
    case 0: return Sign::Zero;
    case 1: return terms_[0].coeff.sign();
    case 2: {
      const auto& [c1, r1] = terms_[0];
      const auto& [c2, r2] = terms_[1];
      const Sign s1 = c1.sign(), s2 = c2.sign();
      if (s1 == s2) return s1;
      // Distinct square classes: |c1| sqrt(r1) != |c2| sqrt(r2).
      const Sign cmp = (c1 * c1 * r1 - c2 * c2 * r2).sign();
      return cmp == Sign::Positive ? s1 : s2;
    }
    default: return std::nullopt;
  }
}

std::optional<RadicalSum> RadicalSum::add(const RadicalSum& o) const {
  RadicalSum out = *this;
  for (const auto& t : o.terms_)
    if (!out.merge(t.coeff, t.radicand)) return std::nullopt;
  return out;
}

std::optional<RadicalSum> RadicalSum::sub(const RadicalSum& o) const { return add(o.neg()); }

std::optional<RadicalSum> RadicalSum::mul(const RadicalSum& o) const {
  RadicalSum out;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      if (!out.merge(a.coeff * b.coeff, a.radicand * b.radicand)) return std::nullopt;
  return out;
}

std::optional<RadicalSum> RadicalSum::inverse() const {
  switch (terms_.size()) {
    case 1: {
      const auto& [c, r] = terms_[0];
      return term((c * r).inverse(), r);
    }
    case 2: {
      // (A + B)^-1 = (A - B) / (A^2 - B^2)
      const auto& [c1, r1] = terms_[0];
      const auto& [c2, r2] = terms_[1];
      const GoldenNumber d = c1 * c1 * r1 - c2 * c2 * r2;
      if (d.is_zero()) return std::nullopt;
      RadicalSum out;
      if (!out.merge(c1 / d, r1) || !out.merge(-c2 / d, r2)) return std::nullopt;
      return out;
    }
    default: return std::nullopt;
  }
}

std::optional<RadicalSum> RadicalSum::div(const RadicalSum& o) const {
  auto inv = o.inverse();
  if (!inv) return std::nullopt;
  return mul(*inv);
}

std::optional<RadicalSum> RadicalSum::sqrt() const {
  if (terms_.empty()) return RadicalSum{};
  auto g = as_golden();
  if (!g || g->sign() == Sign::Negative) return std::nullopt;
  if (auto root = g->sqrt()) return RadicalSum(*root);
  return term(kOne, *g);
}

RadicalSum RadicalSum::neg() const {
  RadicalSum out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.to_string() + ")";
    if (t.radicand != kOne) out += "*sqrt(" + t.radicand.to_string() + ")";
  }
  return out;
}

}  // namespace vexil
