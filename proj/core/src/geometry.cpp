#include "vexil/geometry.hpp"

#include "vexil/constants.hpp"
#include "vexil/errors.hpp"
#include "vexil/eval.hpp"

namespace vexil {

namespace {

bool certified_positive(const Expr& e) { return try_certify_sign(e) == Sign::Positive; }

bool certified_nonnegative(const Expr& e) {
  const auto s = try_certify_sign(e);
  return s && *s != Sign::Negative;
}

Expr cross(const Expr& ax, const Expr& ay, const Expr& bx, const Expr& by) {
  return ax * by - ay * bx;
}

// Unit-circle direction as (cos, sin); nullptr stands for zero.
struct Direction {
  const Expr* cos;
  bool cos_negative;
  const Expr* sin;
  bool sin_negative;
};

Expr offset(const Expr& base, const Expr& radius, const Expr* component, bool negative) {
  if (!component) return base;
  const Expr step = radius * *component;
  return negative ? base - step : base + step;
}

}  // namespace

IdentityStatus points_equal(const Point& p, const Point& q) {
  auto coordinate = [](const Expr& a, const Expr& b) {
    try {
      return verify_identity(a, b);
    } catch (const SignMismatch&) {
      return IdentityStatus::ProvedUnequal;
    }
  };
  const auto sx = coordinate(p.x, q.x);
  const auto sy = coordinate(p.y, q.y);
  if (sx == IdentityStatus::ProvedUnequal || sy == IdentityStatus::ProvedUnequal)
    return IdentityStatus::ProvedUnequal;
  if (sx == IdentityStatus::ProvedEqual && sy == IdentityStatus::ProvedEqual)
    return IdentityStatus::ProvedEqual;
  return IdentityStatus::Undecided;
}

Expr squared_distance(const Point& p, const Point& q) {
  const Expr dx = q.x - p.x, dy = q.y - p.y;
  return dx * dx + dy * dy;
}

Expr orientation(const Point& a, const Point& b, const Point& c) {
  return cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
}

Rect Rect::make(Point origin, Expr width, Expr height) {
  if (!certified_positive(width))
    throw InvalidDimension("rectangle width must be positive: " + width.to_string());
  if (!certified_positive(height))
    throw InvalidDimension("rectangle height must be positive: " + height.to_string());
  return Rect(std::move(origin), std::move(width), std::move(height));
}

std::array<Point, 4> Rect::corners() const {
  return {Point{left(), bottom()}, Point{right(), bottom()}, Point{right(), top()},
          Point{left(), top()}};
}

Segment Segment::make(Point p, Point q) {
  const auto sx = try_certify_sign(q.x - p.x);
  const auto sy = try_certify_sign(q.y - p.y);
  const bool differs = (sx && *sx != Sign::Zero) || (sy && *sy != Sign::Zero);
  if (!differs) throw DegenerateSegment("segment endpoints are not provably distinct");
  return Segment(std::move(p), std::move(q));
}

Pentagram Pentagram::make(Point center, Expr circumradius, StarOrientation orientation) {
  if (!certified_positive(circumradius))
    throw InvalidDimension("star circumradius must be positive: " + circumradius.to_string());
  return Pentagram(std::move(center), std::move(circumradius), orientation);
}

Expr Pentagram::inner_radius() const {
  return circumradius_ / (constants::phi() * constants::phi());
}

Point rect_diagonal_intersection(const Rect& r) {
  const Expr two(2);
  return {r.origin().x + r.width() / two, r.origin().y + r.height() / two};
}

Point segment_intersection(const Segment& s1, const Segment& s2) {
  const Expr d1x = s1.q().x - s1.p().x, d1y = s1.q().y - s1.p().y;
  const Expr d2x = s2.q().x - s2.p().x, d2y = s2.q().y - s2.p().y;
  const Expr denom = cross(d1x, d1y, d2x, d2y);
  const auto s = try_certify_sign(denom);
  if (!s || *s == Sign::Zero)
    throw ParallelOrUndecided("segments are parallel or their crossing is undecided");

  const Expr wx = s2.p().x - s1.p().x, wy = s2.p().y - s1.p().y;
  const Expr t = cross(wx, wy, d2x, d2y) / denom;
  const Expr u = cross(wx, wy, d1x, d1y) / denom;
  const Expr one(1);
  for (const Expr* param : {&t, &u}) {
    if (!certified_nonnegative(*param) || !certified_nonnegative(one - *param))
      throw OutsideSegment("intersection is not certified to lie on both segments");
  }
  return {s1.p().x + t * d1x, s1.p().y + t * d1y};
}

Expr angle_tangent_with_horizontal(const Segment& s) {
  const Expr dx = s.q().x - s.p().x;
  if (certify_sign(dx) == Sign::Zero) throw VerticalSegment("segment is vertical");
  return abs(s.q().y - s.p().y) / abs(dx);
}

std::vector<Point> pentagram_vertices(const Pentagram& star) {
  namespace k = constants;
  // Outer directions at 90, 162, 234, 306, 18 degrees and inner ones at
  // 126, 198, 270, 342, 54 degrees, via cos/sin of 36 and 72.
  static const std::array<Direction, 5> outer{{
      {nullptr, false, nullptr, false},  // (0, 1), built in the loop
      {&k::sin72(), true, &k::cos72(), false},
      {&k::sin36(), true, &k::cos36(), true},
      {&k::sin36(), false, &k::cos36(), true},
      {&k::sin72(), false, &k::cos72(), false},
  }};
  static const std::array<Direction, 5> inner{{
      {&k::sin36(), true, &k::cos36(), false},
      {&k::sin72(), true, &k::cos72(), true},
      {nullptr, false, nullptr, false},  // (0, -1), built in the loop
      {&k::sin72(), false, &k::cos72(), true},
      {&k::sin36(), false, &k::cos36(), false},
  }};

  const Point& c = star.center();
  const Expr& big = star.circumradius();
  const Expr small = star.inner_radius();
  std::vector<Point> out;
  out.reserve(10);
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == 0)
      out.push_back({c.x, c.y + big});
    else
      out.push_back({offset(c.x, big, outer[i].cos, outer[i].cos_negative),
                     offset(c.y, big, outer[i].sin, outer[i].sin_negative)});
    if (i == 2)
      out.push_back({c.x, c.y - small});
    else
      out.push_back({offset(c.x, small, inner[i].cos, inner[i].cos_negative),
                     offset(c.y, small, inner[i].sin, inner[i].sin_negative)});
  }
  return out;
}

}  // namespace vexil
