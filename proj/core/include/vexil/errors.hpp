#pragma once

#include <stdexcept>
#include <string>

namespace vexil {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// An expression left Q(sqrt 5) where an exact field value was required.
class NotInField : public Error {
 public:
  using Error::Error;
};

/// Interval refinement hit its cap before a sign or rounding was certified.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class SignMismatch : public Error {
 public:
  using Error::Error;
};

/// A side condition failed: negative radicand, zero divisor, or a length
/// that is not strictly positive.
class CertificationError : public Error {
 public:
  enum class Kind { NegativeRadicand, ZeroDivisor, NonPositiveLength, Undetermined };

  CertificationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class DegenerateSegment : public Error {
 public:
  using Error::Error;
};

class ParallelOrUndecided : public Error {
 public:
  using Error::Error;
};

class OutsideSegment : public Error {
 public:
  using Error::Error;
};

class VerticalSegment : public Error {
 public:
  using Error::Error;
};

class WrongLayout : public Error {
 public:
  using Error::Error;
};

class UnknownFlag : public Error {
 public:
  using Error::Error;
};

class InvalidOption : public Error {
 public:
  using Error::Error;
};

}  // namespace vexil
