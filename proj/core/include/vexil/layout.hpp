#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "vexil/geometry.hpp"
#include "vexil/identity.hpp"

namespace vexil {

/// Symbolic colour; concrete RGB values are chosen at render time.
enum class ColorRole { Red, White, Blue, Green, Yellow };

std::string_view color_name(ColorRole c);
std::optional<ColorRole> parse_color(std::string_view name);

struct Region {
  std::string name;
  ColorRole color;
  /// Counterclockwise boundary.
  std::vector<Point> polygon;
  /// Set for axis-aligned rectangular regions (all builtins and .flag files).
  std::optional<Rect> rect;
};

struct StarPlacement {
  ColorRole color;
  Pentagram pentagram;
};

/// Exact flag design: coloured regions that tile the canvas, plus stars.
/// The canvas origin is (0, 0) in math orientation.
struct FlagLayout {
  std::string name;
  std::string provenance;
  Rect canvas;
  std::vector<Region> regions;
  std::vector<StarPlacement> stars;

  const Region* find_region(std::string_view region_name) const;
  /// First region with the given colour, if any.
  const Region* find_region(ColorRole color) const;
};

Region make_rect_region(std::string name, ColorRole color, Rect rect);

/// canvas width / canvas height
Expr canvas_ratio(const FlagLayout& layout);

enum class CheckStatus { ProvedEqual, ProvedUnequal, Undecided, Pass, Fail };

std::string_view status_name(CheckStatus s);
CheckStatus to_check_status(IdentityStatus s);
inline std::ostream& operator<<(std::ostream& os, CheckStatus s) { return os << status_name(s); }

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string name, CheckStatus status, std::string detail = {});
  void add_identity(std::string name, const Expr& lhs, const Expr& rhs, std::string detail = {});
  /// True when every check is ProvedEqual or Pass.
  bool all_passed() const;
  bool any_undecided() const;
};

/// Structural invariants: regions tile the canvas (exact area sum, pairwise
/// interior-disjoint rectangles inside the canvas) and every star centre
/// lies in some region. Empty region lists skip the tiling checks.
VerificationReport check_layout_invariants(const FlagLayout& layout);

/// Coordinatewise comparison of canvas, region polygons, and stars.
IdentityStatus layouts_equal(const FlagLayout& a, const FlagLayout& b);

}  // namespace vexil
