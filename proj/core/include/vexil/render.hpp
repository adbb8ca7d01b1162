#pragma once

#include <array>
#include <optional>
#include <string>

#include "vexil/expr.hpp"
#include "vexil/layout.hpp"

namespace vexil {

/// "#RRGGBB" per ColorRole, indexed by the enum value.
using Palette = std::array<std::string, 5>;

Palette default_palette();

struct RenderOptions {
  /// Output units per canvas unit; any certified-positive constructible value.
  Expr scale = Expr(1);
  /// Significant digits of every emitted coordinate, at least 3.
  int digits = 12;
  /// Starting precision for the certified decimal conversion.
  int precision_bits = 64;
  Palette palette = default_palette();
  std::optional<std::string> background = std::string("#FFFFFF");
  /// Appended to the SVG width/height attributes only (e.g. "m").
  std::optional<std::string> unit;
};

/// Throws InvalidOption for digits < 3, a scale not certified positive,
/// or colours not of the form #RRGGBB.
void validate(const RenderOptions& opts);

/// Standalone SVG 1.1 document, y axis pointing down, viewBox
/// "0 0 W H" in scaled units. Regions first in layout order, then stars as
/// single ten-vertex polygons. Every number is the correctly rounded
/// (half-even) decimal of the exact value. Throws PrecisionExhausted.
std::string svg_emit(const FlagLayout& layout, const RenderOptions& opts = {});

/// JSON dump with keys, in order:
///   name, provenance, digits, scale,
///   canvas {width, height, ratio},
///   regions [{name, color, fill, vertices [[x, y], ...]}],
///   stars [{color, fill, center [x, y], circumradius, vertices}]
/// All numbers are decimal strings under the SVG policy (scaled, y down);
/// ratio is width / height.
std::string json_emit(const FlagLayout& layout, const RenderOptions& opts = {});

}  // namespace vexil
