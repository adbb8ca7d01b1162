#include "vexil/render.hpp"

#include <cctype>

#include <json.hpp>

#include "vexil/errors.hpp"
#include "vexil/eval.hpp"

namespace vexil {

namespace {

bool is_hex_colour(const std::string& s) {
  if (s.size() != 7 || s[0] != '#') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isxdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps canvas coordinates to output coordinates: scaled, y flipped.
class Projector {
 public:
  Projector(const FlagLayout& layout, const RenderOptions& opts)
      : opts_(opts), top_(layout.canvas.top()), left_(layout.canvas.left()) {}

  std::string number(const Expr& e) const {
    return to_decimal(e, opts_.digits, opts_.precision_bits);
  }
  std::string length(const Expr& e) const { return number(opts_.scale * e); }
  std::string x(const Point& p) const { return number(opts_.scale * (p.x - left_)); }
  std::string y(const Point& p) const { return number(opts_.scale * (top_ - p.y)); }

 private:
  const RenderOptions& opts_;
  Expr top_;
  Expr left_;
};

const std::string& fill(const RenderOptions& opts, ColorRole c) {
  return opts.palette.at(static_cast<std::size_t>(c));
}

std::string svg_points(const Projector& proj, const std::vector<Point>& pts) {
  std::string out;
  for (const auto& p : pts) {
    if (!out.empty()) out += ' ';
    out += proj.x(p) + "," + proj.y(p);
  }
  return out;
}

}  // namespace

Palette default_palette() {
  Palette p;
  p[static_cast<std::size_t>(ColorRole::Red)] = "#D52B1E";
  p[static_cast<std::size_t>(ColorRole::White)] = "#FFFFFF";
  p[static_cast<std::size_t>(ColorRole::Blue)] = "#0039A6";
  p[static_cast<std::size_t>(ColorRole::Green)] = "#006A4E";
  p[static_cast<std::size_t>(ColorRole::Yellow)] = "#FFCE00";
  return p;
}

void validate(const RenderOptions& opts) {
  if (opts.digits < 3) throw InvalidOption("digits must be at least 3");
  if (opts.precision_bits < 2) throw InvalidOption("precision bits must be at least 2");
  const auto s = try_certify_sign(opts.scale);
  if (s != Sign::Positive) throw InvalidOption("scale must be certified positive");
  for (const auto& c : opts.palette)
    if (!is_hex_colour(c)) throw InvalidOption("palette colour '" + c + "' is not #RRGGBB");
  if (opts.background && !is_hex_colour(*opts.background))
    throw InvalidOption("background '" + *opts.background + "' is not #RRGGBB");
}

std::string svg_emit(const FlagLayout& layout, const RenderOptions& opts) {
  validate(opts);
  const Projector proj(layout, opts);
  const std::string w = proj.length(layout.canvas.width());
  const std::string h = proj.length(layout.canvas.height());
  const std::string unit = opts.unit ? xml_escape(*opts.unit) : "";

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + unit +
         "\" height=\"" + h + unit + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "  <title>" + xml_escape(layout.name) + "</title>\n";
  if (opts.background)
    out += "  <rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"" +
           *opts.background + "\"/>\n";
  for (const auto& r : layout.regions)
    out += "  <polygon id=\"" + xml_escape(r.name) + "\" fill=\"" + fill(opts, r.color) +
           "\" points=\"" + svg_points(proj, r.polygon) + "\"/>\n";
  for (const auto& s : layout.stars) {
    const auto v = pentagram_vertices(s.pentagram);
    out += "  <polygon class=\"star\" fill=\"" + fill(opts, s.color) + "\" points=\"" +
           svg_points(proj, std::vector<Point>(v.begin(), v.end())) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string json_emit(const FlagLayout& layout, const RenderOptions& opts) {
  validate(opts);
  using nlohmann::ordered_json;
  const Projector proj(layout, opts);
  auto point = [&](const Point& p) { return ordered_json::array({proj.x(p), proj.y(p)}); };

  ordered_json doc;
  doc["name"] = layout.name;
  doc["provenance"] = layout.provenance;
  doc["digits"] = opts.digits;
  doc["scale"] = proj.number(opts.scale);
  doc["canvas"] = {{"width", proj.length(layout.canvas.width())},
                   {"height", proj.length(layout.canvas.height())},
                   {"ratio", proj.number(canvas_ratio(layout))}};

  doc["regions"] = ordered_json::array();
  for (const auto& r : layout.regions) {
    ordered_json verts = ordered_json::array();
    for (const auto& p : r.polygon) verts.push_back(point(p));
    doc["regions"].push_back({{"name", r.name},
                              {"color", std::string(color_name(r.color))},
                              {"fill", fill(opts, r.color)},
                              {"vertices", std::move(verts)}});
  }

  doc["stars"] = ordered_json::array();
  for (const auto& s : layout.stars) {
    ordered_json verts = ordered_json::array();
    for (const auto& p : pentagram_vertices(s.pentagram)) verts.push_back(point(p));
    doc["stars"].push_back({{"color", std::string(color_name(s.color))},
                            {"fill", fill(opts, s.color)},
                            {"center", point(s.pentagram.center())},
                            {"circumradius", proj.length(s.pentagram.circumradius())},
                            {"vertices", std::move(verts)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace vexil
