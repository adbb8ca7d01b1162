#pragma once

#include <string>

#include "vexil/errors.hpp"

namespace vexil::flagspec {

/// 1-based source position.
struct SourcePos {
  int line = 1;
  int col = 1;
};

/// Mixin carrying the position every flag-spec diagnostic points at.
class Positioned {
 public:
  explicit Positioned(SourcePos pos) : pos_(pos) {}
  int line() const noexcept { return pos_.line; }
  int col() const noexcept { return pos_.col; }
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

std::string format_position(SourcePos pos, const std::string& message);

class LexError : public Error, public Positioned {
 public:
  LexError(SourcePos pos, const std::string& message)
      : Error(format_position(pos, message)), Positioned(pos), message_(message) {}
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
};

class ParseError : public Error, public Positioned {
 public:
  ParseError(SourcePos pos, std::string expected, std::string found)
      : Error(format_position(pos, "expected " + expected + ", found " + found)),
        Positioned(pos),
        expected_(std::move(expected)),
        found_(std::move(found)) {}
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

/// Unbound or duplicate names, references to unknown regions.
class SemanticError : public Error, public Positioned {
 public:
  SemanticError(SourcePos pos, const std::string& message)
      : Error(format_position(pos, message)), Positioned(pos) {}
};

/// A side condition of a user expression failed at `pos`.
class CertificationError : public vexil::CertificationError, public Positioned {
 public:
  CertificationError(SourcePos pos, Kind kind, const std::string& message)
      : vexil::CertificationError(kind, format_position(pos, message)), Positioned(pos) {}
};

}  // namespace vexil::flagspec
