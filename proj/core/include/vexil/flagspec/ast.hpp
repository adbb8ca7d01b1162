#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vexil/flagspec/errors.hpp"
#include "vexil/layout.hpp"
#include "vexil/rational.hpp"

namespace vexil::flagspec {

struct ExprAst {
  enum class Kind { Number, Ident, Phi, Neg, Add, Sub, Mul, Div, Sqrt };

  Kind kind;
  SourcePos pos;
  Rational value;             // Number
  std::string name;           // Ident
  std::vector<ExprAst> args;  // one operand for Neg/Sqrt, two for binary ops
};

struct LetDecl {
  SourcePos pos;
  std::string name;
  ExprAst value;
};

struct RegionDecl {
  SourcePos pos;
  std::string name;
  ColorRole color;
  ExprAst x, y, w, h;
};

struct StarAtPoint {
  ExprAst x, y;
};

struct StarAtDiagonals {
  SourcePos pos;
  std::string region;
};

struct StarDecl {
  SourcePos pos;
  ColorRole color;
  std::variant<StarAtPoint, StarAtDiagonals> center;
  ExprAst diameter;
};

using Statement = std::variant<LetDecl, RegionDecl, StarDecl>;

struct CanvasDecl {
  SourcePos pos;
  ExprAst width, height;
};

struct SpecAst {
  std::string name;
  CanvasDecl canvas;
  /// Source order; bindings are visible only to later statements.
  std::vector<Statement> body;

  template <class T>
  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& s : body) n += std::holds_alternative<T>(s);
    return n;
  }
};

}  // namespace vexil::flagspec
