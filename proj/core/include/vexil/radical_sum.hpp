#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vexil/golden.hpp"

namespace vexil {

/// Exact value of the form  sum_i c_i * sqrt(r_i)  with c_i, r_i in Q(sqrt 5).
///
/// Radicands are positive and pairwise in distinct square classes of
/// Q(sqrt 5), so the square roots are linearly independent over the field
/// and the representation is canonical up to the choice of class
/// representative: the value is zero iff there are no terms. The class of
/// perfect squares is stored with radicand exactly 1 and always comes first.
///
/// This covers every pentagon and golden-section quantity (sin 36, sin 72,
/// tan 36, 1/tan 36, ...) without a general algebraic-number tower.
class RadicalSum {
 public:
  struct Term {
    GoldenNumber coeff;
    GoldenNumber radicand;
  };

  /// Arithmetic gives up (returns nullopt) beyond this many terms.
  static constexpr std::size_t kMaxTerms = 8;

  RadicalSum() = default;
  RadicalSum(GoldenNumber g);  // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(radicand); radicand must be nonnegative.
  static std::optional<RadicalSum> term(const GoldenNumber& coeff, const GoldenNumber& radicand);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The field value when there is no irrational-radical part.
  std::optional<GoldenNumber> as_golden() const;

  /// Exact sign when decidable by squaring (at most two terms).
  std::optional<Sign> sign() const;

  std::optional<RadicalSum> add(const RadicalSum& o) const;
  std::optional<RadicalSum> sub(const RadicalSum& o) const;
  std::optional<RadicalSum> mul(const RadicalSum& o) const;
  std::optional<RadicalSum> div(const RadicalSum& o) const;
  std::optional<RadicalSum> inverse() const;
  /// Square root of a value that is itself a single field element.
  std::optional<RadicalSum> sqrt() const;
  RadicalSum neg() const;

  std::string to_string() const;

 private:
  bool merge(const GoldenNumber& coeff, const GoldenNumber& radicand);

  std::vector<Term> terms_;
};

}  // namespace vexil
