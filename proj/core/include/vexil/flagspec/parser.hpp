#pragma once

#include <string_view>
#include <vector>

#include "vexil/flagspec/ast.hpp"
#include "vexil/flagspec/lexer.hpp"

namespace vexil::flagspec {

/// Deepest expression nesting accepted before a ParseError.
inline constexpr int kMaxNesting = 256;

/// Grammar:
///   spec   := "flag" STRING "{" canvas { let | region | star } "}" EOF
///   canvas := "canvas" expr "x" expr ";"
///   let    := "let" IDENT "=" expr ";"
///   region := "region" IDENT COLOR "rect" expr expr expr expr ";"
///   star   := "star" COLOR ( "at" expr expr
///                          | "at" "diagonal_intersection" "of" IDENT )
///             "diameter" expr ";"
///   expr   := term { ("+" | "-") term }
///   term   := unary { ("*" | "/") unary }
///   unary  := "-" unary | primary
///   primary:= NUMBER | IDENT | "phi" | "sqrt" "(" expr ")" | "(" expr ")"
/// Throws ParseError at the first unexpected token.
SpecAst parse(const std::vector<Token>& tokens);
SpecAst parse(std::string_view source);

/// A single `expr` followed by EOF.
ExprAst parse_expression(const std::vector<Token>& tokens);
ExprAst parse_expression(std::string_view source);

}  // namespace vexil::flagspec
