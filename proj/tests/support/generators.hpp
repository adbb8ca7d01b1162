#pragma once

#include <random>

#include "vexil/golden.hpp"
#include "vexil/rational.hpp"

namespace vexil::testing {

/// Random rationals with small numerators/denominators, zero included.
inline Rational random_rational(std::mt19937_64& rng, long bound = 50) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline GoldenNumber random_golden(std::mt19937_64& rng, long bound = 50) {
  return {random_rational(rng, bound), random_rational(rng, bound)};
}

inline GoldenNumber random_nonzero_golden(std::mt19937_64& rng, long bound = 50) {
  GoldenNumber g;
  do g = random_golden(rng, bound);
  while (g.is_zero());
  return g;
}

}  // namespace vexil::testing
