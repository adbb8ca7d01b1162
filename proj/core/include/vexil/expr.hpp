#pragma once

#include <memory>
#include <optional>
#include <string>

#include "vexil/radical_sum.hpp"
#include "vexil/rational.hpp"

namespace vexil {

/// Immutable constructible-number expression: a DAG of +, -, *, /, sqrt and
/// negation over rational literals. Subterms are shared by reference.
///
/// Construction certifies side conditions: sqrt() requires a radicand that
/// is provably >= 0 and operator/ a divisor provably != 0. Either failure
/// throws CertificationError. Each node also carries its exact value as a
/// RadicalSum whenever one is representable.
class Expr {
 public:
  enum class Op { Literal, Add, Sub, Mul, Div, Sqrt, Neg };

  Expr() : Expr(Rational(0)) {}
  Expr(Rational value);  // NOLINT(google-explicit-constructor)
  Expr(long value) : Expr(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  Op op() const;
  /// Literal value; only meaningful when op() == Op::Literal.
  const Rational& literal() const;
  /// Children: lhs/rhs for binary ops, operand for Sqrt and Neg.
  const Expr& lhs() const;
  const Expr& rhs() const;
  const Expr& operand() const { return lhs(); }

  /// Exact value, when it has a RadicalSum form.
  const std::optional<RadicalSum>& exact() const;

  /// Stable identity of the underlying node, for memoization.
  const void* id() const { return node_.get(); }
  /// Number of distinct nodes reachable from this one.
  std::size_t dag_size() const;

  /// Infix rendering in .flag syntax, fully parenthesized where needed.
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr sqrt(const Expr& a);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Op op, const Expr& a, const Expr* b);

  std::shared_ptr<const Node> node_;
};

/// Absolute value, choosing the branch by certified sign.
Expr abs(const Expr& x);

/// Structural equality of two DAGs (same ops, same literals).
bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace vexil
