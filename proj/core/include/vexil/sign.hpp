#pragma once

#include <ostream>

namespace vexil {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign sign_of(int v) {
  return v < 0 ? Sign::Negative : (v > 0 ? Sign::Positive : Sign::Zero);
}

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

inline std::ostream& operator<<(std::ostream& os, Sign s) {
  switch (s) {
    case Sign::Negative: return os << "Negative";
    case Sign::Zero: return os << "Zero";
    case Sign::Positive: return os << "Positive";
  }
  return os;
}

}  // namespace vexil
