#include <gtest/gtest.h>

#include <random>

#include "../support/generators.hpp"
#include "vexil/constants.hpp"
#include "vexil/errors.hpp"
#include "vexil/eval.hpp"
#include "vexil/geometry.hpp"

namespace vexil {
namespace {

namespace c = constants;

Point pt(Rational x, Rational y) { return {Expr(std::move(x)), Expr(std::move(y))}; }

void expect_point(const Point& p, const Rational& x, const Rational& y) {
  EXPECT_EQ(verify_identity(p.x, Expr(x)), IdentityStatus::ProvedEqual) << p.x.to_string();
  EXPECT_EQ(verify_identity(p.y, Expr(y)), IdentityStatus::ProvedEqual) << p.y.to_string();
}

std::pair<Segment, Segment> diagonals(const Rect& r) {
  const auto k = r.corners();
  return {Segment::make(k[0], k[2]), Segment::make(k[3], k[1])};
}

TEST(Rect, RejectsNonPositiveSides) {
  EXPECT_THROW(Rect::make(pt(0, 0), Expr(0), Expr(1)), InvalidDimension);
  EXPECT_THROW(Rect::make(pt(0, 0), Expr(1), c::phi() - c::phi()), InvalidDimension);
}

TEST(RectDiagonalIntersection, UnitSquare) {
  expect_point(rect_diagonal_intersection(Rect::make(pt(0, 0), 1, 1)), Rational(1, 2),
               Rational(1, 2));
}

TEST(RectDiagonalIntersection, OffsetRect) {
  expect_point(rect_diagonal_intersection(Rect::make(pt(2, 3), 4, 2)), 4, 4);
}

TEST(RectDiagonalIntersection, IndependenceBlueRect) {
  const Expr wb = Expr(1) / c::tan36();
  const Rect blue = Rect::make(pt(0, 1), wb, Expr(1));
  const Point centre = rect_diagonal_intersection(blue);
  EXPECT_EQ(verify_identity(centre.x, wb / Expr(2)), IdentityStatus::ProvedEqual);
  EXPECT_EQ(verify_identity(centre.y, Expr(Rational(3, 2))), IdentityStatus::ProvedEqual);
  const auto [d1, d2] = diagonals(blue);
  EXPECT_EQ(points_equal(segment_intersection(d1, d2), centre), IdentityStatus::ProvedEqual);
}

TEST(SegmentIntersection, Basic) {
  const auto [d1, d2] = diagonals(Rect::make(pt(0, 0), 1, 1));
  expect_point(segment_intersection(d1, d2), Rational(1, 2), Rational(1, 2));
  expect_point(segment_intersection(Segment::make(pt(0, 0), pt(2, 2)),
                                    Segment::make(pt(0, 2), pt(2, 0))),
               1, 1);
}

TEST(SegmentIntersection, ParallelAndOutside) {
  EXPECT_THROW(segment_intersection(Segment::make(pt(0, 0), pt(1, 1)),
                                    Segment::make(pt(0, 1), pt(1, 2))),
               ParallelOrUndecided);
  EXPECT_THROW(segment_intersection(Segment::make(pt(0, 0), pt(1, 1)),
                                    Segment::make(pt(3, 0), pt(2, 1))),
               OutsideSegment);
}

TEST(Segment, DegenerateRejected) {
  EXPECT_THROW(Segment::make(pt(1, 1), {c::phi() - c::phi() + Expr(1), Expr(1)}),
               DegenerateSegment);
}

TEST(AngleTangent, Examples) {
  EXPECT_EQ(verify_identity(angle_tangent_with_horizontal(Segment::make(pt(0, 0), pt(1, 1))),
                            Expr(1)),
            IdentityStatus::ProvedEqual);
  EXPECT_EQ(verify_identity(angle_tangent_with_horizontal(Segment::make(pt(0, 0), pt(2, 0))),
                            Expr(0)),
            IdentityStatus::ProvedEqual);
  EXPECT_THROW(angle_tangent_with_horizontal(Segment::make(pt(0, 0), pt(0, 1))), VerticalSegment);
}

TEST(AngleTangent, BlueDiagonalIsTan36) {
  const Rect blue = Rect::make(pt(0, 1), Expr(1) / c::tan36(), Expr(1));
  const auto [d1, d2] = diagonals(blue);
  for (const Segment* d : {&d1, &d2}) {
    const Expr t = angle_tangent_with_horizontal(*d);
    EXPECT_EQ(verify_identity(t, c::tan36()), IdentityStatus::ProvedEqual);
    EXPECT_EQ(verify_identity(t, c::tan36_quartic_form()), IdentityStatus::ProvedEqual);
  }
}

TEST(Pentagram, TopVertexAndRadii) {
  const auto star = Pentagram::make(pt(0, 0), Expr(1));
  const auto v = pentagram_vertices(star);
  ASSERT_EQ(v.size(), 10u);
  expect_point(v[0], 0, 1);
  // inner / outer = 1 / phi^2 = (3 - sqrt5) / 2
  EXPECT_EQ(verify_identity(star.inner_radius(), (Expr(3) - c::sqrt5()) / Expr(2)),
            IdentityStatus::ProvedEqual);
  EXPECT_EQ(to_decimal(star.inner_radius(), 6), "0.381966");
}

TEST(Pentagram, AdjacentOuterChordIs2Sin36) {
  const auto v = pentagram_vertices(Pentagram::make(pt(0, 0), Expr(1)));
  const Expr chord2 = squared_distance(v[0], v[8]);
  const Expr expected = Expr(4) * c::sin36() * c::sin36();
  EXPECT_EQ(verify_identity(chord2, expected), IdentityStatus::ProvedEqual);
  EXPECT_EQ(gn_normalize(chord2), GoldenNumber(Rational(5, 2), Rational(-1, 2)));
}

TEST(Pentagram, RejectsNonPositiveRadius) {
  EXPECT_THROW(Pentagram::make(pt(0, 0), Expr(-1)), InvalidDimension);
}

// --- properties ----------------------------------------------------------

TEST(GeometryProperty, DiagonalIntersectionMatchesSegments) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Rational w = testing::random_rational(rng).abs() + Rational(1, 7);
    const Rational h = testing::random_rational(rng).abs() + Rational(1, 9);
    const Rect r = Rect::make(pt(testing::random_rational(rng), testing::random_rational(rng)), w, h);
    const auto [d1, d2] = diagonals(r);
    ASSERT_EQ(points_equal(segment_intersection(d1, d2), rect_diagonal_intersection(r)),
              IdentityStatus::ProvedEqual);
  }
}

class PentagramProperty : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(PentagramProperty, ExactRadiiAndSimpleBoundary) {
  const auto [cx, cy, rq] = GetParam();
  // Centre offset by an irrational amount, as in the Independence layout.
  const Point centre{Expr(cx) + Expr(1) / c::tan36(), Expr(Rational(cy, 2))};
  const Expr radius = Expr(Rational(rq, 3)) / c::phi();
  const auto star = Pentagram::make(centre, radius);
  const auto v = pentagram_vertices(star);
  const Expr outer2 = radius * radius;
  const Expr inner2 = star.inner_radius() * star.inner_radius();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Expr d2 = squared_distance(centre, v[i]);
    EXPECT_EQ(verify_identity(d2, i % 2 == 0 ? outer2 : inner2), IdentityStatus::ProvedEqual)
        << "vertex " << i;
    // Left turn at outer tips, right turn at inner notches.
    const Sign turn = certify_sign(orientation(v[(i + 9) % 10], v[i], v[(i + 1) % 10]));
    EXPECT_EQ(turn, i % 2 == 0 ? Sign::Positive : Sign::Negative) << "vertex " << i;
  }
  // Deterministic recomputation.
  const auto again = pentagram_vertices(star);
  for (std::size_t i = 0; i < v.size(); ++i)
    EXPECT_TRUE(structurally_equal(v[i].x, again[i].x) && structurally_equal(v[i].y, again[i].y));
}

INSTANTIATE_TEST_SUITE_P(Centres, PentagramProperty,
                         ::testing::Values(std::make_tuple(0, 0, 3), std::make_tuple(-2, 5, 1),
                                           std::make_tuple(7, -3, 10)));

}  // namespace
}  // namespace vexil
