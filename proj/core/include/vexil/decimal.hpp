#pragma once

#include <string>

#include "vexil/rational.hpp"

namespace vexil {

/// Rounds to `digits` significant decimal digits, ties to even, and prints
/// the result in plain positional notation with trailing zeros removed
/// ("900", "0.5", "1.80171"). Zero prints as "0".
std::string round_significant(const Rational& x, int digits);

/// Truncates toward zero, keeping exactly `fraction_digits` digits after
/// the point ("0.726" for tan 36 at 3).
std::string truncate_fraction(const Rational& x, int fraction_digits);

}  // namespace vexil
