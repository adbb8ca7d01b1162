#include "vexil/flagspec/lower.hpp"

#include <fstream>
#include <sstream>

#include "vexil/constants.hpp"
#include "vexil/eval.hpp"
#include "vexil/flagspec/parser.hpp"

namespace vexil::flagspec {

namespace {

template <class F>
Expr certified(SourcePos pos, F&& build) {
  try {
    return build();
  } catch (const vexil::CertificationError& e) {
    throw CertificationError(pos, e.kind(), e.what());
  }
}

Expr positive_length(const ExprAst& ast, const Bindings& env, std::string_view what) {
  Expr e = lower_expression(ast, env);
  const auto s = try_certify_sign(e);
  if (!s)
    throw CertificationError(ast.pos, vexil::CertificationError::Kind::Undetermined,
                             "cannot certify the sign of the " + std::string(what));
  if (*s != Sign::Positive)
    throw CertificationError(ast.pos, vexil::CertificationError::Kind::NonPositiveLength,
                             std::string(what) + " must be positive");
  return e;
}

struct Lowerer {
  Bindings env;
  std::map<std::string, Rect, std::less<>> rects;
  FlagLayout layout;

  void operator()(const LetDecl& d) {
    if (env.contains(d.name))
      throw SemanticError(d.pos, "duplicate binding '" + d.name + "'");
    env.emplace(d.name, lower_expression(d.value, env));
  }

  void operator()(const RegionDecl& d) {
    if (rects.contains(d.name)) throw SemanticError(d.pos, "duplicate region '" + d.name + "'");
    const Point origin{lower_expression(d.x, env), lower_expression(d.y, env)};
    Rect r = Rect::make(origin, positive_length(d.w, env, "region width"),
                        positive_length(d.h, env, "region height"));
    rects.emplace(d.name, r);
    layout.regions.push_back(make_rect_region(d.name, d.color, std::move(r)));
  }

  void operator()(const StarDecl& d) {
    Point center = std::visit(
        [&](const auto& c) -> Point {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, StarAtPoint>) {
            return {lower_expression(c.x, env), lower_expression(c.y, env)};
          } else {
            auto it = rects.find(c.region);
            if (it == rects.end())
              throw SemanticError(c.pos, "unknown region '" + c.region + "'");
            return rect_diagonal_intersection(it->second);
          }
        },
        d.center);
    const Expr diameter = positive_length(d.diameter, env, "star diameter");
    layout.stars.push_back({d.color, Pentagram::make(std::move(center), diameter / Expr(2))});
  }
};

}  // namespace

Expr lower_expression(const ExprAst& ast, const Bindings& env) {
  using K = ExprAst::Kind;
  switch (ast.kind) {
    case K::Number: return Expr(ast.value);
    case K::Phi: return constants::phi();
    case K::Ident: {
      auto it = env.find(ast.name);
      if (it == env.end()) throw SemanticError(ast.pos, "unbound name '" + ast.name + "'");
      return it->second;
    }
    case K::Neg: return -lower_expression(ast.args.at(0), env);
    case K::Sqrt: {
      const Expr x = lower_expression(ast.args.at(0), env);
      return certified(ast.pos, [&] { return sqrt(x); });
    }
    default: break;
  }
  const Expr a = lower_expression(ast.args.at(0), env);
  const Expr b = lower_expression(ast.args.at(1), env);
  switch (ast.kind) {
    case K::Add: return a + b;
    case K::Sub: return a - b;
    case K::Mul: return a * b;
    default: return certified(ast.pos, [&] { return a / b; });
  }
}

FlagLayout lower(const SpecAst& ast, std::string provenance) {
  const Expr w = positive_length(ast.canvas.width, {}, "canvas width");
  const Expr h = positive_length(ast.canvas.height, {}, "canvas height");
  Lowerer l{{}, {}, {ast.name, std::move(provenance), Rect::make(Point{Expr(0), Expr(0)}, w, h), {}, {}}};
  for (const auto& stmt : ast.body) std::visit(l, stmt);
  return std::move(l.layout);
}

FlagLayout load_flag_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return lower(parse(text.str()), path.string());
}

}  // namespace vexil::flagspec
