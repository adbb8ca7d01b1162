#include "vexil/constructions.hpp"

#include <initializer_list>

#include "vexil/constants.hpp"
#include "vexil/errors.hpp"
#include "vexil/eval.hpp"

namespace vexil {

namespace {

namespace k = constants;

void require_positive(const Rational& v, std::string_view what) {
  if (v.sign() != Sign::Positive)
    throw InvalidDimension(std::string(what) + " must be positive, got " + v.to_string());
}

Point at(Expr x, Expr y) { return {std::move(x), std::move(y)}; }

IdentityStatus identity(const Expr& a, const Expr& b) {
  try {
    return verify_identity(a, b);
  } catch (const SignMismatch&) {
    return IdentityStatus::ProvedUnequal;
  }
}

CheckStatus all_of(std::initializer_list<IdentityStatus> statuses) {
  bool undecided = false;
  for (auto s : statuses) {
    if (s == IdentityStatus::ProvedUnequal) return CheckStatus::ProvedUnequal;
    if (s == IdentityStatus::Undecided) undecided = true;
  }
  return undecided ? CheckStatus::Undecided : CheckStatus::ProvedEqual;
}

std::string approx(const Expr& e, int digits = 8) {
  try {
    return to_decimal(e, digits);
  } catch (const Error&) {
    return "?";
  }
}

bool certified_positive(const Expr& e) { return try_certify_sign(e) == Sign::Positive; }

Expr diameter(const StarPlacement& s) { return Expr(2) * s.pentagram.circumradius(); }

// Nepal's flag is ratio-only: one pseudo-check on the printed decimals.
void add_nepal_check(VerificationReport& report, const Expr& ratio) {
  std::string truncated;
  try {
    truncated = truncate_decimal(ratio, 3);
  } catch (const PrecisionExhausted&) {
    report.add("width/height truncates to 0.820", CheckStatus::Undecided, "refinement cap reached");
    return;
  }
  report.add("width/height truncates to 0.820",
             truncated == "0.820" ? CheckStatus::Pass : CheckStatus::Fail,
             "ratio = " + approx(ratio, 12) + ", truncated " + truncated);
}

void add_chile_1818_checks(VerificationReport& report, const FlagLayout& layout) {
  const Region* blue = layout.find_region(ColorRole::Blue);
  const Region* white = layout.find_region(ColorRole::White);
  if (!blue || !white || !blue->rect || !white->rect || layout.stars.empty()) {
    report.add("layout has blue and white rectangles and a star", CheckStatus::Fail);
    return;
  }
  const Expr& wb = blue->rect->width();
  const Expr& h = blue->rect->height();
  const Expr& ww = white->rect->width();
  const Expr d = diameter(layout.stars.front());
  const Expr ratio = canvas_ratio(layout);
  const Expr closed_ratio = (Expr(2) + k::sqrt5()) / sqrt(Expr(10) - Expr(2) * k::sqrt5());
  const Expr phi_ratio = k::phi() * k::phi() / (Expr(2) * k::tan36());

  report.add_identity("white/blue width ratio equals phi", ww / wb, k::phi());
  const Expr aspect = h / wb;
  report.add("blue height/width equals tan 36",
             all_of({identity(aspect, k::tan36()), identity(k::tan36(), k::tan36_quartic_form())}),
             approx(aspect) + " = sqrt(10-2sqrt5)/(1+sqrt5) = 5^(1/4)/sqrt(2+sqrt5)");
  report.add("flag width/height equals (2+sqrt5)/sqrt(10-2sqrt5)",
             all_of({identity(ratio, closed_ratio), identity(ratio, phi_ratio)}),
             approx(ratio) + ", also phi^2/(2 tan 36)");
  report.add_identity("blue height / star circumdiameter equals phi", h / d, k::phi());
  report.add_identity("golden section (blue+white)/white equals phi", (wb + ww) / ww, k::phi());
}

void add_chile_current_checks(VerificationReport& report, const FlagLayout& layout) {
  const Region* blue = layout.find_region(ColorRole::Blue);
  const Region* white = layout.find_region(ColorRole::White);
  const Region* red = layout.find_region(ColorRole::Red);
  if (!blue || !white || !red || !blue->rect || !white->rect || !red->rect ||
      layout.stars.empty()) {
    report.add("layout has blue, white and red rectangles and a star", CheckStatus::Fail);
    return;
  }
  const Expr& s = blue->rect->width();
  const Expr sq = s * s;
  report.add_identity("width/height proportion is 3:2", canvas_ratio(layout), Rational(3, 2));
  report.add("star circumdiameter is half the square side",
             all_of({identity(blue->rect->height(), s),
                     identity(diameter(layout.stars.front()), s / Expr(2))}),
             "diameter " + approx(diameter(layout.stars.front())) + ", side " + approx(s));
  report.add("six-square decomposition (1 blue, 2 white, 3 red)",
             all_of({identity(blue->rect->area(), sq), identity(white->rect->area(), Expr(2) * sq),
                     identity(red->rect->area(), Expr(3) * sq),
                     identity(layout.canvas.area(), Expr(6) * sq)}),
             "square area " + approx(sq));
}

}  // namespace

const std::vector<std::string_view>& builtin_names() {
  static const std::vector<std::string_view> names{kChile1818, kChileCurrent, kTogo, kNepalRatio};
  return names;
}

FlagLayout build_independence_flag(const Rational& region_height) {
  require_positive(region_height, "region height");
  const Expr h(region_height);
  const Expr wb = h / k::tan36();
  const Expr ww = k::phi() * wb;
  const Expr width = wb + ww;

  const Rect blue = Rect::make(at(Expr(0), h), wb, h);
  FlagLayout layout{
      std::string(kChile1818), std::string(kChile1818),
      Rect::make(at(Expr(0), Expr(0)), width, Expr(2) * h), {}, {}};
  layout.regions.push_back(make_rect_region("blue", ColorRole::Blue, blue));
  layout.regions.push_back(make_rect_region("white", ColorRole::White, Rect::make(at(wb, h), ww, h)));
  layout.regions.push_back(
      make_rect_region("red", ColorRole::Red, Rect::make(at(Expr(0), Expr(0)), width, h)));
  const Expr star_diameter = h / k::phi();
  layout.stars.push_back({ColorRole::White, Pentagram::make(rect_diagonal_intersection(blue),
                                                            star_diameter / Expr(2))});
  return layout;
}

FlagLayout build_current_flag(const Rational& square_side) {
  require_positive(square_side, "square side");
  const Expr s(square_side);
  const Rect blue = Rect::make(at(Expr(0), s), s, s);
  FlagLayout layout{std::string(kChileCurrent), std::string(kChileCurrent),
                    Rect::make(at(Expr(0), Expr(0)), Expr(3) * s, Expr(2) * s), {}, {}};
  layout.regions.push_back(make_rect_region("blue", ColorRole::Blue, blue));
  layout.regions.push_back(
      make_rect_region("white", ColorRole::White, Rect::make(at(s, s), Expr(2) * s, s)));
  layout.regions.push_back(
      make_rect_region("red", ColorRole::Red, Rect::make(at(Expr(0), Expr(0)), Expr(3) * s, s)));
  layout.stars.push_back(
      {ColorRole::White, Pentagram::make(rect_diagonal_intersection(blue), s / Expr(4))});
  return layout;
}

FlagLayout build_togo(const Rational& height) {
  require_positive(height, "height");
  const Expr h(height);
  const Expr width = k::phi() * h;
  const Expr stripe = h / Expr(5);
  const Expr canton = Expr(3) * stripe;

  FlagLayout layout{std::string(kTogo), std::string(kTogo),
                    Rect::make(at(Expr(0), Expr(0)), width, h), {}, {}};
  // Stripes from the top; the upper three start at the canton's edge.
  for (int i = 0; i < 5; ++i) {
    const Expr bottom = h - Expr(i + 1) * stripe;
    const bool beside_canton = i < 3;
    const Expr left = beside_canton ? canton : Expr(0);
    const Expr w = beside_canton ? width - canton : width;
    layout.regions.push_back(make_rect_region("stripe" + std::to_string(i + 1),
                                              i % 2 == 0 ? ColorRole::Green : ColorRole::Yellow,
                                              Rect::make(at(left, bottom), w, stripe)));
  }
  const Rect canton_rect = Rect::make(at(Expr(0), h - canton), canton, canton);
  layout.regions.push_back(make_rect_region("canton", ColorRole::Red, canton_rect));
  // diameter 4/5 of the canton side
  layout.stars.push_back({ColorRole::White, Pentagram::make(rect_diagonal_intersection(canton_rect),
                                                            Expr(2) * canton / Expr(5))});
  return layout;
}

Expr nepal_ratio_expr() {
  const Expr r2 = sqrt(Expr(2));
  const Expr a = (Expr(297) - Expr(180) * r2) / (Expr(92) - Expr(36) * r2);
  const Expr b = Expr(8) - Expr(3) * r2;
  const Expr numerator =
      Expr(24) + a * (Expr(1) + b / (sqrt(Expr(118) - Expr(48) * r2) - Expr(6)));
  const Expr inner = sqrt(Expr(1) + Expr(18) / (Expr(41) - Expr(24) * r2)) - Expr(1);
  const Expr denominator = Expr(32) + a * (Expr(1) + Expr(6) / (b * inner));
  return numerator / denominator;
}

FlagLayout build_nepal_canvas() {
  return FlagLayout{std::string(kNepalRatio), std::string(kNepalRatio),
                    Rect::make(at(Expr(0), Expr(0)), nepal_ratio_expr(), Expr(1)), {}, {}};
}

FlagLayout build_builtin(std::string_view name) {
  if (name == kChile1818) return build_independence_flag(Rational(1));
  if (name == kChileCurrent) return build_current_flag(Rational(1));
  if (name == kTogo) return build_togo(Rational(1));
  if (name == kNepalRatio) return build_nepal_canvas();
  throw UnknownFlag("unknown flag: " + std::string(name));
}

Expr builtin_ratio(std::string_view name) {
  if (name == kNepalRatio) return nepal_ratio_expr();
  return canvas_ratio(build_builtin(name));
}

VerificationReport verify_angle_configuration(const FlagLayout& layout) {
  const Region* blue = layout.name == kChile1818 ? layout.find_region(ColorRole::Blue) : nullptr;
  if (!blue || !blue->rect)
    throw WrongLayout("angle configuration needs a chile-1818 layout with a blue rectangle");

  const Rect& r = *blue->rect;
  const auto corner = r.corners();
  const Segment rising = Segment::make(corner[0], corner[2]);
  const Segment falling = Segment::make(corner[3], corner[1]);
  const Expr t_rising = angle_tangent_with_horizontal(rising);
  const Expr t_falling = angle_tangent_with_horizontal(falling);

  VerificationReport report;
  report.add_identity("rising diagonal slope equals tan 36", t_rising, k::tan36());
  report.add_identity("falling diagonal slope equals tan 36", t_falling, k::tan36());

  // Angle between the diagonals on the side facing the vertical edges.
  const Expr d1x = rising.q().x - rising.p().x, d1y = rising.q().y - rising.p().y;
  const Expr d2x = falling.q().x - falling.p().x, d2y = falling.q().y - falling.p().y;
  const Expr dot = d1x * d2x + d1y * d2y;
  if (certified_positive(dot)) {
    const Expr crossing = abs(d1x * d2y - d1y * d2x) / dot;
    report.add_identity("diagonals cross at 72 (tangent tan 72)", crossing, k::tan72());
  } else {
    report.add("diagonals cross at 72 (tangent tan 72)", CheckStatus::Fail,
               "diagonals do not cross at an acute angle");
  }
  report.add_identity("double angle 2t/(1-t^2) of the slope equals tan 72",
                      Expr(2) * t_rising / (Expr(1) - t_rising * t_rising), k::tan72());
  report.add_identity("diagonal meets the vertical side at 54 (tangent 1/tan 36)",
                      abs(d1x) / abs(d1y), Expr(1) / k::tan36());

  const Point centre = segment_intersection(rising, falling);
  report.add_identity("half-diagonals over the top side are equal (isosceles)",
                      squared_distance(centre, corner[3]), squared_distance(centre, corner[2]));

  if (layout.stars.empty()) {
    report.add("star centred at the diagonal crossing", CheckStatus::Fail, "no star");
    return report;
  }
  const Pentagram& star = layout.stars.front().pentagram;
  report.add("star centred at the diagonal crossing",
             to_check_status(points_equal(centre, star.center())));

  const auto v = pentagram_vertices(star);
  const Expr leg_a = squared_distance(v[0], v[1]);
  const Expr leg_b = squared_distance(v[0], v[9]);
  const Expr base = squared_distance(v[1], v[9]);
  report.add("star point is a 36-72-72 golden triangle",
             all_of({identity(leg_a, leg_b), identity(leg_a / base, k::phi() * k::phi())}),
             "leg/base = phi");

  const Expr d = Expr(2) * star.circumradius();
  const bool inside = certified_positive(r.height() - d) && certified_positive(r.width() - d);
  report.add("star circumcircle lies inside the blue rectangle",
             inside ? CheckStatus::Pass : CheckStatus::Fail,
             "diameter " + approx(d) + " < min(" + approx(r.height()) + ", " + approx(r.width()) + ")");
  return report;
}

VerificationReport verify_flag_identities(std::string_view name) {
  if (name == kNepalRatio) {
    VerificationReport report;
    add_nepal_check(report, nepal_ratio_expr());
    return report;
  }
  return verify_layout_identities(build_builtin(name));
}

VerificationReport verify_layout_identities(const FlagLayout& layout) {
  VerificationReport report;
  if (layout.name == kChile1818) {
    add_chile_1818_checks(report, layout);
  } else if (layout.name == kChileCurrent) {
    add_chile_current_checks(report, layout);
  } else if (layout.name == kTogo) {
    report.add_identity("width/height equals phi", canvas_ratio(layout), k::phi());
  } else if (layout.name == kNepalRatio) {
    add_nepal_check(report, canvas_ratio(layout));
  } else {
    report = check_layout_invariants(layout);
  }
  return report;
}

}  // namespace vexil
