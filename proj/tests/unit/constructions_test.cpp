#include <gtest/gtest.h>

#include "vexil/constants.hpp"
#include "vexil/constructions.hpp"
#include "vexil/errors.hpp"
#include "vexil/eval.hpp"

namespace vexil {
namespace {

namespace c = constants;

const Region& region(const FlagLayout& l, std::string_view name) {
  const Region* r = l.find_region(name);
  if (!r) throw std::runtime_error("missing region " + std::string(name));
  return *r;
}

void expect_all_passed(const VerificationReport& report) {
  EXPECT_FALSE(report.checks.empty());
  for (const auto& ch : report.checks)
    EXPECT_TRUE(ch.status == CheckStatus::ProvedEqual || ch.status == CheckStatus::Pass)
        << ch.name << ": " << ch.status << " (" << ch.detail << ")";
}

TEST(Independence, CanvasRatio) {
  const auto l = build_independence_flag(1);
  const Expr ratio = canvas_ratio(l);
  EXPECT_EQ(verify_identity(ratio, (Expr(2) + c::sqrt5()) / sqrt(Expr(10) - Expr(2) * c::sqrt5())),
            IdentityStatus::ProvedEqual);
  EXPECT_EQ(verify_identity(ratio, c::phi() * c::phi() / (Expr(2) * c::tan36())),
            IdentityStatus::ProvedEqual);
  EXPECT_EQ(truncate_decimal(ratio, 3), "1.801");
  EXPECT_EQ(to_decimal(ratio, 6), "1.80171");
}

TEST(Independence, GoldenWidthsAndStar) {
  const auto l = build_independence_flag(1);
  const Expr& wb = region(l, "blue").rect->width();
  const Expr& ww = region(l, "white").rect->width();
  EXPECT_EQ(verify_identity(ww / wb, c::phi()), IdentityStatus::ProvedEqual);
  EXPECT_EQ(to_decimal(wb, 9), "1.37638192");
  const Expr d = Expr(2) * l.stars.at(0).pentagram.circumradius();
  EXPECT_EQ(to_decimal(d, 8), "0.61803399");
  EXPECT_EQ(verify_identity(Expr(1) / d, c::phi()), IdentityStatus::ProvedEqual);
}

TEST(Independence, RejectsNonPositiveHeight) {
  EXPECT_THROW(build_independence_flag(0), InvalidDimension);
  EXPECT_THROW(build_independence_flag(Rational(-1, 2)), InvalidDimension);
}

TEST(Independence, StarCircleInsideBlue) {
  const auto l = build_independence_flag(Rational(5, 3));
  const Rect& blue = *region(l, "blue").rect;
  const Expr d = Expr(2) * l.stars.at(0).pentagram.circumradius();
  EXPECT_EQ(certify_sign(blue.height() - d), Sign::Positive);
  EXPECT_EQ(certify_sign(blue.width() - d), Sign::Positive);
}

TEST(CurrentFlag, Proportions) {
  const auto l = build_current_flag(1);
  EXPECT_EQ(gn_normalize(canvas_ratio(l)), GoldenNumber(Rational(3, 2)));
  EXPECT_EQ(gn_normalize(l.stars.at(0).pentagram.circumradius()), GoldenNumber(Rational(1, 4)));
}

TEST(CurrentFlag, AreasAtSideTwo) {
  const auto l = build_current_flag(2);
  EXPECT_EQ(gn_normalize(region(l, "blue").rect->area()), GoldenNumber(4));
  EXPECT_EQ(gn_normalize(region(l, "white").rect->area()), GoldenNumber(8));
  EXPECT_EQ(gn_normalize(region(l, "red").rect->area()), GoldenNumber(12));
  EXPECT_EQ(gn_normalize(l.canvas.area()), GoldenNumber(24));
}

TEST(Togo, Proportions) {
  const auto l1 = build_togo(1);
  EXPECT_EQ(gn_normalize(l1.canvas.width()), GoldenNumber::phi());
  EXPECT_EQ(to_decimal(l1.canvas.width(), 5), "1.618");
  EXPECT_EQ(gn_normalize(region(l1, "canton").rect->width()), GoldenNumber(Rational(3, 5)));
  const auto l5 = build_togo(5);
  for (int i = 1; i <= 5; ++i)
    EXPECT_EQ(gn_normalize(region(l5, "stripe" + std::to_string(i)).rect->height()),
              GoldenNumber(1));
  EXPECT_EQ(region(l5, "stripe1").color, ColorRole::Green);
  EXPECT_EQ(region(l5, "stripe2").color, ColorRole::Yellow);
  EXPECT_EQ(region(l5, "stripe5").color, ColorRole::Green);
}

TEST(Nepal, RatioAndSideConditions) {
  const Expr n = nepal_ratio_expr();
  EXPECT_EQ(truncate_decimal(n, 3), "0.820");
  EXPECT_EQ(to_decimal(n, 12), "0.820337587769");
  const Expr r2 = sqrt(Expr(2));
  EXPECT_EQ(to_decimal(Expr(118) - Expr(48) * r2, 4), "50.12");
  EXPECT_EQ(to_decimal(sqrt(Expr(118) - Expr(48) * r2) - Expr(6), 5), "1.0794");
  EXPECT_THROW(gn_normalize(n), NotInField);
}

TEST(AngleConfiguration, AllChecksAtTwoScales) {
  for (const Rational& h : {Rational(1), Rational(7, 3)}) {
    const auto report = verify_angle_configuration(build_independence_flag(h));
    EXPECT_GE(report.checks.size(), 9u);
    expect_all_passed(report);
  }
}

TEST(AngleConfiguration, CurrentFlagIsWrongLayout) {
  EXPECT_THROW(verify_angle_configuration(build_current_flag(1)), WrongLayout);
}

TEST(FlagIdentities, Chile1818) {
  const auto report = verify_flag_identities("chile-1818");
  EXPECT_EQ(report.checks.size(), 5u);
  for (const auto& ch : report.checks) EXPECT_EQ(ch.status, CheckStatus::ProvedEqual) << ch.name;
}

TEST(FlagIdentities, ChileCurrent) {
  const auto report = verify_flag_identities("chile-current");
  EXPECT_EQ(report.checks.size(), 3u);
  expect_all_passed(report);
}

TEST(FlagIdentities, TogoAndNepal) {
  const auto togo = verify_flag_identities("togo");
  ASSERT_EQ(togo.checks.size(), 1u);
  EXPECT_EQ(togo.checks[0].status, CheckStatus::ProvedEqual);
  const auto nepal = verify_flag_identities("nepal-ratio");
  ASSERT_EQ(nepal.checks.size(), 1u);
  EXPECT_EQ(nepal.checks[0].status, CheckStatus::Pass);
}

TEST(FlagIdentities, UnknownFlag) {
  EXPECT_THROW(verify_flag_identities("usa"), UnknownFlag);
  EXPECT_THROW(build_builtin("usa"), UnknownFlag);
  const auto nepal = build_builtin("nepal-ratio");
  EXPECT_TRUE(nepal.regions.empty());
  EXPECT_TRUE(structurally_equal(nepal.canvas.width(), nepal_ratio_expr()));
}

// --- properties ----------------------------------------------------------

TEST(ConstructionProperty, BuiltinsSatisfyLayoutInvariants) {
  for (auto name : {kChile1818, kChileCurrent, kTogo}) {
    SCOPED_TRACE(std::string(name));
    expect_all_passed(check_layout_invariants(build_builtin(name)));
  }
}

FlagLayout scaled(const FlagLayout& l, const Rational& k) {
  auto mul = [&](const Point& p) { return Point{Expr(k) * p.x, Expr(k) * p.y}; };
  FlagLayout out{l.name, l.provenance,
                 Rect::make(mul(l.canvas.origin()), Expr(k) * l.canvas.width(),
                            Expr(k) * l.canvas.height()),
                 {}, {}};
  for (const auto& r : l.regions) {
    Region copy = r;
    for (auto& p : copy.polygon) p = mul(p);
    out.regions.push_back(copy);
  }
  for (const auto& s : l.stars)
    out.stars.push_back(
        {s.color, Pentagram::make(mul(s.pentagram.center()), Expr(k) * s.pentagram.circumradius())});
  return out;
}

TEST(ConstructionProperty, ScaleEquivariance) {
  const Rational k(11, 4);
  EXPECT_EQ(layouts_equal(build_independence_flag(k), scaled(build_independence_flag(1), k)),
            IdentityStatus::ProvedEqual);
  EXPECT_EQ(layouts_equal(build_current_flag(k * Rational(3)), scaled(build_current_flag(3), k)),
            IdentityStatus::ProvedEqual);
  EXPECT_EQ(layouts_equal(build_togo(k), scaled(build_togo(1), k)), IdentityStatus::ProvedEqual);
  EXPECT_EQ(layouts_equal(build_togo(k), build_togo(1)), IdentityStatus::ProvedUnequal);
}

}  // namespace
}  // namespace vexil
