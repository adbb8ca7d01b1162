#pragma once

#include <string_view>
#include <vector>

#include "vexil/expr.hpp"
#include "vexil/layout.hpp"
#include "vexil/rational.hpp"

namespace vexil {

inline constexpr std::string_view kChile1818 = "chile-1818";
inline constexpr std::string_view kChileCurrent = "chile-current";
inline constexpr std::string_view kTogo = "togo";
inline constexpr std::string_view kNepalRatio = "nepal-ratio";

const std::vector<std::string_view>& builtin_names();

/// Chilean Independence Flag. With h = region_height:
///  - blue rectangle top-left with h / width = tan 36,
///  - white rectangle to its right, phi times as wide,
///  - red band across the full width below, also of height h,
///  - white star at the blue rectangle's diagonal crossing whose
///    circumcircle diameter is h / phi.
/// Throws InvalidDimension unless region_height > 0.
FlagLayout build_independence_flag(const Rational& region_height);

/// Current Chilean flag on a 3 x 2 grid of squares of side `square_side`:
/// blue square top-left, white over the two squares to its right, red over
/// the bottom three; star centred on the blue square with circumcircle
/// diameter half its side.
FlagLayout build_current_flag(const Rational& square_side);

/// Togo: width phi * height, five equal green/yellow stripes (green
/// outermost), red square canton three stripes tall in the upper hoist,
/// white star centred in the canton with diameter 4/5 of its side.
FlagLayout build_togo(const Rational& height);

/// Nepal's width-height ratio as the nested-radical closed form, built
/// term by term; every radicand and divisor is certified on construction.
Expr nepal_ratio_expr();

/// Canvas-only layout of width nepal_ratio_expr() and height 1.
FlagLayout build_nepal_canvas();

/// Default-size layout for a builtin name. Throws UnknownFlag otherwise.
FlagLayout build_builtin(std::string_view name);

/// Width / height of a builtin (nepal-ratio included).
Expr builtin_ratio(std::string_view name);

/// Angle configuration of the Independence Flag's canton diagonals and the
/// triangles they cut.
/// Throws WrongLayout unless `layout` is a chile-1818 layout with a blue
/// rectangle.
VerificationReport verify_angle_configuration(const FlagLayout& layout);

/// The stated identities for a builtin flag name. Throws UnknownFlag.
VerificationReport verify_flag_identities(std::string_view name);

/// The stated identities, read off a layout whose name is a builtin (e.g. a
/// lowered .flag file). Unknown names fall back to structural invariants.
VerificationReport verify_layout_identities(const FlagLayout& layout);

}  // namespace vexil
