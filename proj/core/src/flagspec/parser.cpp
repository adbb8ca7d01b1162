#include "vexil/flagspec/parser.hpp"

namespace vexil::flagspec {

namespace {

std::string describe(const Token& t) {
  if (t.kind == TokenKind::Eof) return "end of input";
  if (t.kind == TokenKind::String) return "string \"" + t.lexeme + "\"";
  return std::string(token_kind_name(t.kind)) + " '" + t.lexeme + "'";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::Eof)
      throw ParseError({1, 1}, "token stream ending in end of input", "unterminated stream");
  }

  SpecAst spec() {
    SpecAst ast;
    expect(TokenKind::Keyword, "flag");
    ast.name = expect_kind(TokenKind::String, "flag name string").lexeme;
    expect(TokenKind::Symbol, "{");
    ast.canvas = canvas();
    while (!cur().is(TokenKind::Symbol, "}")) {
      const Token& t = cur();
      if (t.is(TokenKind::Keyword, "let")) {
        ast.body.emplace_back(let());
      } else if (t.is(TokenKind::Keyword, "region")) {
        ast.body.emplace_back(region());
      } else if (t.is(TokenKind::Keyword, "star")) {
        ast.body.emplace_back(star());
      } else {
        fail("'let', 'region', 'star' or '}'");
      }
    }
    advance();
    expect_kind(TokenKind::Eof, "end of input");
    return ast;
  }

  ExprAst standalone_expression() {
    ExprAst e = expr();
    expect_kind(TokenKind::Eof, "end of input");
    return e;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& advance() {
    const Token& t = toks_[i_];
    if (t.kind != TokenKind::Eof) ++i_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(cur().pos(), expected, describe(cur()));
  }

  const Token& expect(TokenKind kind, std::string_view text) {
    if (!cur().is(kind, text)) fail("'" + std::string(text) + "'");
    return advance();
  }

  const Token& expect_kind(TokenKind kind, const std::string& what) {
    if (cur().kind != kind) fail(what);
    return advance();
  }

  ColorRole color() {
    if (cur().kind == TokenKind::Keyword) {
      if (auto c = parse_color(cur().lexeme)) {
        advance();
        return *c;
      }
    }
    fail("colour (red, white, blue, green or yellow)");
  }

  CanvasDecl canvas() {
    CanvasDecl c;
    c.pos = expect(TokenKind::Keyword, "canvas").pos();
    c.width = expr();
    expect(TokenKind::Keyword, "x");
    c.height = expr();
    expect(TokenKind::Symbol, ";");
    return c;
  }

  LetDecl let() {
    LetDecl d;
    d.pos = advance().pos();
    d.name = expect_kind(TokenKind::Ident, "identifier").lexeme;
    expect(TokenKind::Symbol, "=");
    d.value = expr();
    expect(TokenKind::Symbol, ";");
    return d;
  }

  RegionDecl region() {
    RegionDecl d;
    d.pos = advance().pos();
    d.name = expect_kind(TokenKind::Ident, "region name").lexeme;
    d.color = color();
    expect(TokenKind::Keyword, "rect");
    d.x = expr();
    d.y = expr();
    d.w = expr();
    d.h = expr();
    expect(TokenKind::Symbol, ";");
    return d;
  }

  StarDecl star() {
    StarDecl d;
    d.pos = advance().pos();
    d.color = color();
    expect(TokenKind::Keyword, "at");
    if (cur().is(TokenKind::Keyword, "diagonal_intersection")) {
      advance();
      expect(TokenKind::Keyword, "of");
      const Token& name = expect_kind(TokenKind::Ident, "region name");
      d.center = StarAtDiagonals{name.pos(), name.lexeme};
    } else {
      ExprAst x = expr();
      ExprAst y = expr();
      d.center = StarAtPoint{std::move(x), std::move(y)};
    }
    expect(TokenKind::Keyword, "diameter");
    d.diameter = expr();
    expect(TokenKind::Symbol, ";");
    return d;
  }

  // Caps nesting of grouping and prefix operators.
  class DepthGuard {
   public:
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting) p_.fail("shallower expression (nesting limit reached)");
    }
    ~DepthGuard() { --p_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;

   private:
    Parser& p_;
  };

  static ExprAst node(ExprAst::Kind k, SourcePos pos, std::vector<ExprAst> args) {
    return ExprAst{k, pos, Rational(0), {}, std::move(args)};
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (;;) {
      const Token& t = cur();
      if (t.is(TokenKind::Symbol, "+") || t.is(TokenKind::Symbol, "-")) {
        const auto k = t.lexeme == "+" ? ExprAst::Kind::Add : ExprAst::Kind::Sub;
        const SourcePos p = advance().pos();
        ExprAst rhs = term();
        std::vector<ExprAst> args;
        args.push_back(std::move(lhs));
        args.push_back(std::move(rhs));
        lhs = node(k, p, std::move(args));
      } else {
        return lhs;
      }
    }
  }

  ExprAst term() {
    ExprAst lhs = unary();
    for (;;) {
      const Token& t = cur();
      if (t.is(TokenKind::Symbol, "*") || t.is(TokenKind::Symbol, "/")) {
        const auto k = t.lexeme == "*" ? ExprAst::Kind::Mul : ExprAst::Kind::Div;
        const SourcePos p = advance().pos();
        ExprAst rhs = unary();
        std::vector<ExprAst> args;
        args.push_back(std::move(lhs));
        args.push_back(std::move(rhs));
        lhs = node(k, p, std::move(args));
      } else {
        return lhs;
      }
    }
  }

  ExprAst unary() {
    if (cur().is(TokenKind::Symbol, "-")) {
      DepthGuard guard(*this);
      const SourcePos p = advance().pos();
      std::vector<ExprAst> args;
      args.push_back(unary());
      return node(ExprAst::Kind::Neg, p, std::move(args));
    }
    return primary();
  }

  ExprAst primary() {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Number: {
        advance();
        return ExprAst{ExprAst::Kind::Number, t.pos(), *Rational::parse(t.lexeme), {}, {}};
      }
      case TokenKind::Ident:
        advance();
        return ExprAst{ExprAst::Kind::Ident, t.pos(), Rational(0), t.lexeme, {}};
      case TokenKind::Keyword:
        if (t.lexeme == "phi") {
          advance();
          return node(ExprAst::Kind::Phi, t.pos(), {});
        }
        if (t.lexeme == "sqrt") {
          DepthGuard guard(*this);
          advance();
          expect(TokenKind::Symbol, "(");
          std::vector<ExprAst> args;
          args.push_back(expr());
          expect(TokenKind::Symbol, ")");
          return node(ExprAst::Kind::Sqrt, t.pos(), std::move(args));
        }
        break;
      case TokenKind::Symbol:
        if (t.lexeme == "(") {
          DepthGuard guard(*this);
          advance();
          ExprAst inner = expr();
          expect(TokenKind::Symbol, ")");
          return inner;
        }
        break;
      default: break;
    }
    fail("expression");
  }

  const std::vector<Token>& toks_;
  std::size_t i_ = 0;
  int depth_ = 0;
};

}  // namespace

SpecAst parse(const std::vector<Token>& tokens) { return Parser(tokens).spec(); }
SpecAst parse(std::string_view source) { return parse(tokenize(source)); }

ExprAst parse_expression(const std::vector<Token>& tokens) {
  return Parser(tokens).standalone_expression();
}
ExprAst parse_expression(std::string_view source) { return parse_expression(tokenize(source)); }

}  // namespace vexil::flagspec
