#include "vexil/flagspec/lexer.hpp"

#include <algorithm>
#include <array>

namespace vexil::flagspec {

namespace {

constexpr std::array<std::string_view, 18> kKeywords{
    "flag", "canvas", "let", "region", "rect", "star", "at", "diagonal_intersection", "of",
    "diameter", "phi", "sqrt", "red", "white", "blue", "green", "yellow", "x"};

constexpr std::string_view kSymbols = "{}();=+-*/";

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      const SourcePos start = pos();
      if (at_end()) {
        out.push_back({TokenKind::Eof, "", start.line, start.col});
        return out;
      }
      const char c = peek();
      if (is_digit(c)) {
        out.push_back(number(start));
      } else if (is_alpha(c)) {
        std::string word;
        while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) word += advance();
        const TokenKind k = is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident;
        out.push_back({k, std::move(word), start.line, start.col});
      } else if (c == '"') {
        out.push_back(string(start));
      } else if (kSymbols.find(c) != std::string_view::npos) {
        out.push_back({TokenKind::Symbol, std::string(1, advance()), start.line, start.col});
      } else {
        throw LexError(start, "illegal character " + describe_char());
      }
    }
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }
  SourcePos pos() const { return {line_, col_}; }

  char advance() {
    const char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if (!is_continuation(c)) {
      ++col_;
    }
    return c;
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string describe_char() const {
    const unsigned char c = static_cast<unsigned char>(peek());
    if (c >= 0x20 && c < 0x7F) return std::string("'") + static_cast<char>(c) + "'";
    std::size_t n = 1;
    while (n < 4 && is_continuation(peek(n))) ++n;
    std::string hex;
    static constexpr char kHex[] = "0123456789ABCDEF";
    for (std::size_t k = 0; k < n; ++k) {
      const auto b = static_cast<unsigned char>(peek(k));
      hex += "\\x";
      hex += kHex[b >> 4];
      hex += kHex[b & 0xF];
    }
    return "\"" + hex + "\"";
  }

  Token number(SourcePos start) {
    std::string text;
    while (is_digit(peek())) text += advance();
    if (peek() == '.') {
      text += advance();
      if (!is_digit(peek())) throw LexError(pos(), "malformed number: expected digit after '.'");
      while (is_digit(peek())) text += advance();
    }
    if (is_alpha(peek()) || peek() == '.')
      throw LexError(pos(), "malformed number: unexpected " + describe_char());
    return {TokenKind::Number, std::move(text), start.line, start.col};
  }

  Token string(SourcePos start) {
    advance();
    std::string text;
    for (;;) {
      if (at_end() || peek() == '\n') throw LexError(start, "unterminated string");
      const char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        const SourcePos esc = pos();
        const char e = at_end() ? '\0' : advance();
        if (e != '"' && e != '\\') throw LexError(esc, "unknown escape in string");
        text += e;
      } else {
        text += c;
      }
    }
    return {TokenKind::String, std::move(text), start.line, start.col};
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::string format_position(SourcePos pos, const std::string& message) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message;
}

std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Symbol: return "symbol";
    case TokenKind::String: return "string";
    case TokenKind::Eof: return "end of input";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace vexil::flagspec
