#include <gtest/gtest.h>

#include <json.hpp>
#include <regex>

#include "vexil/constructions.hpp"
#include "vexil/errors.hpp"
#include "vexil/render.hpp"

namespace vexil {
namespace {

using nlohmann::ordered_json;

std::string attr(const std::string& svg, const std::string& name) {
  std::smatch m;
  const std::regex re("<svg[^>]* " + name + "=\"([^\"]*)\"");
  if (!std::regex_search(svg, m, re)) return "";
  return m[1];
}

RenderOptions with_digits(int d) {
  RenderOptions o;
  o.digits = d;
  return o;
}

TEST(Svg, CurrentFlagViewBox) {
  RenderOptions opts;
  opts.scale = Expr(300);
  const std::string svg = svg_emit(build_current_flag(1), opts);
  EXPECT_EQ(attr(svg, "viewBox"), "0 0 900 600");
  EXPECT_EQ(attr(svg, "width"), "900");
  EXPECT_NE(svg.find("<title>chile-current</title>"), std::string::npos);
  // background, three regions, one star
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n'), 9);
}

TEST(Svg, IndependenceFlagAtPhysicalWidth) {
  const auto layout = build_independence_flag(1);
  RenderOptions opts = with_digits(6);
  opts.scale = Expr(Rational::parse("2.4").value()) / layout.canvas.width();
  opts.unit = "m";
  const std::string svg = svg_emit(layout, opts);
  EXPECT_EQ(attr(svg, "width"), "2.4m");
  EXPECT_EQ(attr(svg, "height"), "1.33207m");
  EXPECT_EQ(attr(svg, "viewBox"), "0 0 2.4 1.33207");
}

TEST(Svg, CanvasOnlyLayout) {
  FlagLayout empty{"blank", "test", Rect::make({Expr(0), Expr(0)}, Expr(2), Expr(1)), {}, {}};
  const std::string svg = svg_emit(empty);
  EXPECT_NE(svg.find("<rect x=\"0\" y=\"0\" width=\"2\" height=\"1\" fill=\"#FFFFFF\"/>"),
            std::string::npos);
  EXPECT_EQ(svg.find("<polygon"), std::string::npos);
  RenderOptions bare;
  bare.background.reset();
  EXPECT_EQ(svg_emit(empty, bare).find("<rect"), std::string::npos);
}

TEST(Svg, YAxisPointsDown) {
  const std::string svg = svg_emit(build_current_flag(1));
  // blue square occupies the top-left of the screen
  EXPECT_NE(svg.find("id=\"blue\" fill=\"#0039A6\" points=\"0,1 1,1 1,0 0,0\""), std::string::npos);
}

TEST(Svg, EscapesNames) {
  FlagLayout l{"a<b&\"c\"", "t", Rect::make({Expr(0), Expr(0)}, Expr(1), Expr(1)), {}, {}};
  EXPECT_NE(svg_emit(l).find("<title>a&lt;b&amp;&quot;c&quot;</title>"), std::string::npos);
}

TEST(Json, DocumentedExamples) {
  auto doc = ordered_json::parse(json_emit(build_current_flag(1)));
  EXPECT_EQ(doc["stars"][0]["center"], ordered_json::array({"0.5", "0.5"}));
  EXPECT_EQ(doc["stars"][0]["vertices"].size(), 10u);
  EXPECT_EQ(doc["stars"][0]["circumradius"], "0.25");

  doc = ordered_json::parse(json_emit(build_independence_flag(1), with_digits(6)));
  EXPECT_EQ(doc["canvas"]["ratio"], "1.80171");
  EXPECT_EQ(doc["regions"].size(), 3u);

  doc = ordered_json::parse(json_emit(build_togo(1), with_digits(6)));
  EXPECT_EQ(doc["canvas"]["width"], "1.61803");
}

TEST(Json, KeyOrder) {
  const auto doc = ordered_json::parse(json_emit(build_togo(1)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "provenance", "digits", "scale", "canvas",
                                            "regions", "stars"}));
  keys.clear();
  for (const auto& [k, v] : doc["stars"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"color", "fill", "center", "circumradius", "vertices"}));
}

TEST(RenderOptionsValidation, Rejections) {
  const auto l = build_current_flag(1);
  EXPECT_THROW(svg_emit(l, with_digits(2)), InvalidOption);
  RenderOptions o;
  o.scale = Expr(-1);
  EXPECT_THROW(json_emit(l, o), InvalidOption);
  o = {};
  o.palette[0] = "red";
  EXPECT_THROW(svg_emit(l, o), InvalidOption);
  o = {};
  o.background = "#12345";
  EXPECT_THROW(svg_emit(l, o), InvalidOption);
}

// --- properties ----------------------------------------------------------

class RenderProperty : public ::testing::TestWithParam<std::string_view> {};

TEST_P(RenderProperty, ByteDeterministic) {
  const auto l = build_builtin(GetParam());
  EXPECT_EQ(svg_emit(l), svg_emit(build_builtin(GetParam())));
  EXPECT_EQ(json_emit(l), json_emit(l));
}

std::vector<std::string> numbers(const ordered_json& j) {
  std::vector<std::string> out;
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-'))
      out.push_back(s);
  } else if (j.is_structured()) {
    for (const auto& v : j) {
      auto sub = numbers(v);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

TEST_P(RenderProperty, HigherStartingPrecisionReproducesDigits) {
  const auto l = build_builtin(GetParam());
  RenderOptions hi = with_digits(12);
  hi.precision_bits = 4 * 64;
  EXPECT_EQ(json_emit(l, with_digits(12)), json_emit(l, hi));
}

// Unit in the last place of a d-significant-digit decimal near |v|.
Rational ulp(const std::string& v, int d) {
  std::string digits = v[0] == '-' ? v.substr(1) : v;
  const auto dot = digits.find('.');
  const std::string int_part = digits.substr(0, dot);
  if (int_part != "0") return pow10(static_cast<long>(int_part.size()) - d);
  const auto first = digits.find_first_not_of('0', dot + 1);
  return pow10(-static_cast<long>(first - dot - 1) - d);
}

// Both strings are correct roundings of one value, so they differ by less
// than one coarse ulp.
TEST_P(RenderProperty, RefinementIsMonotone) {
  const auto l = build_builtin(GetParam());
  const auto coarse = numbers(ordered_json::parse(json_emit(l, with_digits(6))));
  const auto fine = numbers(ordered_json::parse(json_emit(l, with_digits(14))));
  ASSERT_EQ(coarse.size(), fine.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const Rational c = *Rational::parse(coarse[i]);
    const Rational f = *Rational::parse(fine[i]);
    if (f.is_zero()) {
      EXPECT_TRUE(c.is_zero());
      continue;
    }
    EXPECT_LE((c - f).abs(), ulp(fine[i], 6)) << coarse[i] << " vs " << fine[i];
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, RenderProperty, ::testing::ValuesIn(builtin_names()),
                         [](const auto& info) {
                           std::string s(info.param);
                           for (auto& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

}  // namespace
}  // namespace vexil
