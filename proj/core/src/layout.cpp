#include "vexil/layout.hpp"

#include <array>

#include "vexil/errors.hpp"
#include "vexil/eval.hpp"

namespace vexil {

namespace {

constexpr std::array<std::pair<ColorRole, std::string_view>, 5> kColorNames{{
    {ColorRole::Red, "red"},
    {ColorRole::White, "white"},
    {ColorRole::Blue, "blue"},
    {ColorRole::Green, "green"},
    {ColorRole::Yellow, "yellow"},
}};

// nullopt when the sign cannot be certified.
using Verdict = std::optional<bool>;

Verdict nonnegative(const Expr& e) {
  const auto s = try_certify_sign(e);
  if (!s) return std::nullopt;
  return *s != Sign::Negative;
}

Verdict all_of(std::initializer_list<Verdict> vs) {
  bool unknown = false;
  for (const auto& v : vs) {
    if (v == false) return false;
    unknown = unknown || !v;
  }
  return unknown ? Verdict{} : Verdict{true};
}

Verdict any_of(std::initializer_list<Verdict> vs) {
  bool unknown = false;
  for (const auto& v : vs) {
    if (v == true) return true;
    unknown = unknown || !v;
  }
  return unknown ? Verdict{} : Verdict{false};
}

CheckStatus to_status(Verdict v) {
  if (!v) return CheckStatus::Undecided;
  return *v ? CheckStatus::Pass : CheckStatus::Fail;
}

Verdict contains(const Rect& r, const Point& p) {
  return all_of({nonnegative(p.x - r.left()), nonnegative(r.right() - p.x),
                 nonnegative(p.y - r.bottom()), nonnegative(r.top() - p.y)});
}

Verdict inside(const Rect& inner, const Rect& outer) {
  return all_of({nonnegative(inner.left() - outer.left()),
                 nonnegative(inner.bottom() - outer.bottom()),
                 nonnegative(outer.right() - inner.right()), nonnegative(outer.top() - inner.top())});
}

Verdict interiors_disjoint(const Rect& a, const Rect& b) {
  return any_of({nonnegative(b.left() - a.right()), nonnegative(a.left() - b.right()),
                 nonnegative(b.bottom() - a.top()), nonnegative(a.bottom() - b.top())});
}

std::string approx(const Expr& e) {
  try {
    return to_decimal(e, 8);
  } catch (const Error&) {
    return "?";
  }
}

// Folds per-coordinate statuses: any unequal wins, then any undecided.
class Tally {
 public:
  void add(IdentityStatus s) {
    if (s == IdentityStatus::ProvedUnequal) unequal_ = true;
    if (s == IdentityStatus::Undecided) undecided_ = true;
  }
  void add_points(const Point& p, const Point& q) { add(points_equal(p, q)); }
  IdentityStatus result() const {
    if (unequal_) return IdentityStatus::ProvedUnequal;
    return undecided_ ? IdentityStatus::Undecided : IdentityStatus::ProvedEqual;
  }
  bool decided_unequal() const { return unequal_; }

 private:
  bool unequal_ = false;
  bool undecided_ = false;
};

IdentityStatus safe_identity(const Expr& a, const Expr& b) {
  try {
    return verify_identity(a, b);
  } catch (const SignMismatch&) {
    return IdentityStatus::ProvedUnequal;
  }
}

}  // namespace

std::string_view color_name(ColorRole c) {
  for (const auto& [role, name] : kColorNames)
    if (role == c) return name;
  return "unknown";
}

std::optional<ColorRole> parse_color(std::string_view name) {
  for (const auto& [role, n] : kColorNames)
    if (n == name) return role;
  return std::nullopt;
}

const Region* FlagLayout::find_region(std::string_view region_name) const {
  for (const auto& r : regions)
    if (r.name == region_name) return &r;
  return nullptr;
}

const Region* FlagLayout::find_region(ColorRole color) const {
  for (const auto& r : regions)
    if (r.color == color) return &r;
  return nullptr;
}

Region make_rect_region(std::string name, ColorRole color, Rect rect) {
  const auto k = rect.corners();
  return Region{std::move(name), color, std::vector<Point>(k.begin(), k.end()), std::move(rect)};
}

Expr canvas_ratio(const FlagLayout& layout) {
  return layout.canvas.width() / layout.canvas.height();
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::ProvedEqual: return "ProvedEqual";
    case CheckStatus::ProvedUnequal: return "ProvedUnequal";
    case CheckStatus::Undecided: return "Undecided";
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
  }
  return "?";
}

CheckStatus to_check_status(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::ProvedEqual: return CheckStatus::ProvedEqual;
    case IdentityStatus::ProvedUnequal: return CheckStatus::ProvedUnequal;
    case IdentityStatus::Undecided: return CheckStatus::Undecided;
  }
  return CheckStatus::Undecided;
}

void VerificationReport::add(std::string name, CheckStatus status, std::string detail) {
  checks.push_back({std::move(name), status, std::move(detail)});
}

void VerificationReport::add_identity(std::string name, const Expr& lhs, const Expr& rhs,
                                      std::string detail) {
  const IdentityStatus s = safe_identity(lhs, rhs);
  if (detail.empty()) detail = approx(lhs) + " vs " + approx(rhs);
  add(std::move(name), to_check_status(s), std::move(detail));
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::ProvedEqual && c.status != CheckStatus::Pass) return false;
  return true;
}

bool VerificationReport::any_undecided() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Undecided) return true;
  return false;
}

VerificationReport check_layout_invariants(const FlagLayout& layout) {
  VerificationReport report;
  const Rect& canvas = layout.canvas;
  if (!layout.regions.empty()) {
    bool rectangular = true;
    Verdict within = true, disjoint = true;
    Expr area(0);
    for (std::size_t i = 0; i < layout.regions.size(); ++i) {
      const auto& ri = layout.regions[i];
      if (!ri.rect) {
        rectangular = false;
        continue;
      }
      area = area + ri.rect->area();
      within = all_of({within, inside(*ri.rect, canvas)});
      for (std::size_t j = i + 1; j < layout.regions.size(); ++j) {
        const auto& rj = layout.regions[j];
        if (rj.rect) disjoint = all_of({disjoint, interiors_disjoint(*ri.rect, *rj.rect)});
      }
    }
    report.add("regions are rectangles", rectangular ? CheckStatus::Pass : CheckStatus::Fail);
    report.add("regions lie inside the canvas", to_status(within));
    report.add("regions are pairwise interior-disjoint", to_status(disjoint));
    report.add_identity("region areas sum to canvas area", area, canvas.area());
  }
  for (std::size_t s = 0; s < layout.stars.size(); ++s) {
    const Point& c = layout.stars[s].pentagram.center();
    Verdict found = false;
    for (const auto& r : layout.regions)
      if (r.rect) found = any_of({found, contains(*r.rect, c)});
    report.add("star " + std::to_string(s + 1) + " centre lies in a region", to_status(found));
  }
  return report;
}

IdentityStatus layouts_equal(const FlagLayout& a, const FlagLayout& b) {
  if (a.regions.size() != b.regions.size() || a.stars.size() != b.stars.size())
    return IdentityStatus::ProvedUnequal;
  Tally tally;
  tally.add_points(a.canvas.origin(), b.canvas.origin());
  tally.add(safe_identity(a.canvas.width(), b.canvas.width()));
  tally.add(safe_identity(a.canvas.height(), b.canvas.height()));
  for (std::size_t i = 0; i < a.regions.size() && !tally.decided_unequal(); ++i) {
    const auto& ra = a.regions[i];
    const auto& rb = b.regions[i];
    if (ra.color != rb.color || ra.polygon.size() != rb.polygon.size())
      return IdentityStatus::ProvedUnequal;
    for (std::size_t k = 0; k < ra.polygon.size(); ++k) tally.add_points(ra.polygon[k], rb.polygon[k]);
  }
  for (std::size_t i = 0; i < a.stars.size() && !tally.decided_unequal(); ++i) {
    const auto& sa = a.stars[i];
    const auto& sb = b.stars[i];
    if (sa.color != sb.color) return IdentityStatus::ProvedUnequal;
    tally.add_points(sa.pentagram.center(), sb.pentagram.center());
    tally.add(safe_identity(sa.pentagram.circumradius(), sb.pentagram.circumradius()));
    const auto va = pentagram_vertices(sa.pentagram);
    const auto vb = pentagram_vertices(sb.pentagram);
    for (std::size_t k = 0; k < va.size(); ++k) tally.add_points(va[k], vb[k]);
  }
  return tally.result();
}

}  // namespace vexil
