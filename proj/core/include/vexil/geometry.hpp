#pragma once

#include <array>
#include <vector>

#include "vexil/expr.hpp"
#include "vexil/identity.hpp"

namespace vexil {

/// Planar point in math orientation (y grows upward).
struct Point {
  Expr x;
  Expr y;
};

/// Coordinatewise identity check: ProvedEqual only if both coordinates are.
IdentityStatus points_equal(const Point& p, const Point& q);

/// Exact squared Euclidean distance.
Expr squared_distance(const Point& p, const Point& q);

/// z-component of (b - a) x (c - a).
Expr orientation(const Point& a, const Point& b, const Point& c);

/// Axis-aligned rectangle. `origin` is the corner with the smallest
/// coordinates; the rectangle spans [x, x + width] x [y, y + height].
class Rect {
 public:
  /// Throws InvalidDimension unless width and height are certified > 0.
  static Rect make(Point origin, Expr width, Expr height);

  const Point& origin() const { return origin_; }
  const Expr& width() const { return width_; }
  const Expr& height() const { return height_; }

  Expr left() const { return origin_.x; }
  Expr bottom() const { return origin_.y; }
  Expr right() const { return origin_.x + width_; }
  Expr top() const { return origin_.y + height_; }
  Expr area() const { return width_ * height_; }

  /// Counterclockwise, starting at the origin corner.
  std::array<Point, 4> corners() const;

 private:
  Rect(Point origin, Expr width, Expr height)
      : origin_(std::move(origin)), width_(std::move(width)), height_(std::move(height)) {}

  Point origin_;
  Expr width_;
  Expr height_;
};

class Segment {
 public:
  /// Throws DegenerateSegment unless the endpoints provably differ.
  static Segment make(Point p, Point q);

  const Point& p() const { return p_; }
  const Point& q() const { return q_; }

 private:
  Segment(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {}

  Point p_;
  Point q_;
};

enum class StarOrientation { PointUp };

/// Regular five-pointed {5/2} star.
class Pentagram {
 public:
  /// Throws InvalidDimension unless circumradius is certified > 0.
  static Pentagram make(Point center, Expr circumradius,
                        StarOrientation orientation = StarOrientation::PointUp);

  const Point& center() const { return center_; }
  const Expr& circumradius() const { return circumradius_; }
  /// circumradius / phi^2
  Expr inner_radius() const;
  StarOrientation orientation() const { return orientation_; }

 private:
  Pentagram(Point center, Expr r, StarOrientation o)
      : center_(std::move(center)), circumradius_(std::move(r)), orientation_(o) {}

  Point center_;
  Expr circumradius_;
  StarOrientation orientation_;
};

/// Center of the rectangle, where its diagonals cross.
Point rect_diagonal_intersection(const Rect& r);

/// Intersection of two non-parallel segments. Throws ParallelOrUndecided
/// when the direction cross product cannot be certified nonzero and
/// OutsideSegment when the crossing lies off either segment.
Point segment_intersection(const Segment& s1, const Segment& s2);

/// |dy| / |dx|; throws VerticalSegment when dx is zero.
Expr angle_tangent_with_horizontal(const Segment& s);

/// The ten boundary vertices of the star as a simple concave decagon,
/// counterclockwise from the topmost outer vertex, alternating outer and
/// inner. Outer vertices sit at 90 + 72k degrees, inner ones at
/// 126 + 72k degrees on the inner circle.
std::vector<Point> pentagram_vertices(const Pentagram& star);

}  // namespace vexil
