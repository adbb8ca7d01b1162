#pragma once

#include <optional>
#include <ostream>

#include "vexil/expr.hpp"
#include "vexil/golden.hpp"
#include "vexil/radical_sum.hpp"

namespace vexil {

enum class IdentityStatus { ProvedEqual, ProvedUnequal, Undecided };

inline std::ostream& operator<<(std::ostream& os, IdentityStatus s) {
  switch (s) {
    case IdentityStatus::ProvedEqual: return os << "ProvedEqual";
    case IdentityStatus::ProvedUnequal: return os << "ProvedUnequal";
    case IdentityStatus::Undecided: return os << "Undecided";
  }
  return os;
}

/// Exact value in Q(sqrt 5); throws NotInField otherwise.
GoldenNumber gn_normalize(const Expr& x);

/// Exact value of x^(2^k). Square roots are peeled by squaring, so nested
/// radicals such as the fourth root of 5 reduce after enough squarings.
std::optional<RadicalSum> normalize_power(const Expr& x, int k);

/// Decides lhs == rhs. Exact by normalization or by comparing equal powers
/// x^(2^k); ProvedUnequal also follows from disjoint enclosures.
/// Both sides must share a certified sign (zero matches either); otherwise
/// throws SignMismatch.
IdentityStatus verify_identity(const Expr& lhs, const Expr& rhs);

}  // namespace vexil
