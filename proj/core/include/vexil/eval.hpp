#pragma once

#include <optional>
#include <string>

#include "vexil/ball.hpp"
#include "vexil/expr.hpp"
#include "vexil/sign.hpp"

namespace vexil {

/// Interval refinement starts here and doubles up to the cap.
inline constexpr int kInitialBits = 64;
inline constexpr int kRefinementCapBits = 4096;

/// Rigorous enclosure with radius <= 2^-precision_bits * max(1, |center|).
/// Working precision doubles until the bound holds; throws
/// PrecisionExhausted past max(kRefinementCapBits, 4 * precision_bits).
Ball expr_eval(const Expr& x, int precision_bits);

/// Certified sign. Exact when the value has a decidable RadicalSum form or
/// a power of it vanishes; interval refinement otherwise.
/// Throws PrecisionExhausted when refinement cannot separate from zero.
Sign certify_sign(const Expr& x);

/// Like certify_sign but returns nullopt instead of throwing.
std::optional<Sign> try_certify_sign(const Expr& x);

/// Certified round-half-even to `digits` significant digits. Exact for
/// rational values; refines from `initial_bits` otherwise.
std::string to_decimal(const Expr& x, int digits, int initial_bits = kInitialBits);

/// Certified truncation toward zero to `fraction_digits` decimals.
std::string truncate_decimal(const Expr& x, int fraction_digits);

}  // namespace vexil
