#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "vexil/flagspec/errors.hpp"

namespace vexil::flagspec {

enum class TokenKind { Ident, Number, Keyword, Symbol, String, Eof };

std::string_view token_kind_name(TokenKind k);
inline std::ostream& operator<<(std::ostream& os, TokenKind k) { return os << token_kind_name(k); }

/// For String tokens `lexeme` holds the unescaped contents.
struct Token {
  TokenKind kind;
  std::string lexeme;
  int line;
  int col;

  SourcePos pos() const { return {line, col}; }
  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
};

bool is_keyword(std::string_view word);

/// Splits flag-spec source into tokens terminated by a single Eof token.
/// Columns count code points. A number directly followed by a letter, digit
/// or '.' is malformed; the error points at the first offending character.
/// Throws LexError.
std::vector<Token> tokenize(std::string_view source);

}  // namespace vexil::flagspec
