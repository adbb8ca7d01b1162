#include "vexil/expr.hpp"

#include <map>
#include <unordered_set>
#include <utility>

#include "vexil/errors.hpp"
#include "vexil/eval.hpp"

namespace vexil {

struct Expr::Node {
  Op op;
  Rational value;
  // Empty for literals; Sqrt and Neg use only `a`.
  std::optional<Expr> a;
  std::optional<Expr> b;
  std::optional<RadicalSum> exact;

  Node(Op o, Rational v) : op(o), value(std::move(v)) {}
};

namespace {

std::optional<RadicalSum> combine(Expr::Op op, const std::optional<RadicalSum>& a,
                                  const std::optional<RadicalSum>& b) {
  if (!a) return std::nullopt;
  switch (op) {
    case Expr::Op::Neg: return a->neg();
    case Expr::Op::Sqrt: return a->sqrt();
    default: break;
  }
  if (!b) return std::nullopt;
  switch (op) {
    case Expr::Op::Add: return a->add(*b);
    case Expr::Op::Sub: return a->sub(*b);
    case Expr::Op::Mul: return a->mul(*b);
    case Expr::Op::Div: return a->div(*b);
    default: return std::nullopt;
  }
}

int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::Add:
    case Expr::Op::Sub: return 1;
    case Expr::Op::Mul:
    case Expr::Op::Div: return 2;
    case Expr::Op::Neg: return 3;
    default: return 4;
  }
}

}  // namespace

Expr::Expr(Rational value) {
  auto node = std::make_shared<Node>(Op::Literal, std::move(value));
  node->exact = RadicalSum(GoldenNumber(node->value));
  node_ = std::move(node);
}

Expr::Op Expr::op() const { return node_->op; }
const Rational& Expr::literal() const { return node_->value; }
const Expr& Expr::lhs() const { return *node_->a; }
const Expr& Expr::rhs() const { return *node_->b; }
const std::optional<RadicalSum>& Expr::exact() const { return node_->exact; }

Expr Expr::make(Op op, const Expr& a, const Expr* b) {
  auto node = std::make_shared<Node>(op, Rational(0));
  node->a = a;
  if (b) node->b = *b;
  node->exact = combine(op, a.exact(), b ? b->exact() : std::nullopt);
  return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Add, a, &b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Sub, a, &b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Mul, a, &b); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Op::Neg, a, nullptr); }

Expr operator/(const Expr& a, const Expr& b) {
  const auto s = try_certify_sign(b);
  if (!s)
    throw CertificationError(CertificationError::Kind::Undetermined,
                             "cannot certify divisor nonzero: " + b.to_string());
  if (*s == Sign::Zero)
    throw CertificationError(CertificationError::Kind::ZeroDivisor,
                             "division by zero: " + b.to_string());
  return Expr::make(Expr::Op::Div, a, &b);
}

Expr sqrt(const Expr& a) {
  const auto s = try_certify_sign(a);
  if (!s)
    throw CertificationError(CertificationError::Kind::Undetermined,
                             "cannot certify radicand nonnegative: " + a.to_string());
  if (*s == Sign::Negative)
    throw CertificationError(CertificationError::Kind::NegativeRadicand,
                             "square root of negative value: " + a.to_string());
  return Expr::make(Expr::Op::Sqrt, a, nullptr);
}

Expr abs(const Expr& x) { return certify_sign(x) == Sign::Negative ? -x : x; }

std::size_t Expr::dag_size() const {
  std::unordered_set<const void*> seen;
  std::vector<const Expr*> stack{this};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->id()).second) continue;
    if (e->op() == Op::Literal) continue;
    stack.push_back(&e->lhs());
    if (e->op() != Op::Sqrt && e->op() != Op::Neg) stack.push_back(&e->rhs());
  }
  return seen.size();
}

std::string Expr::to_string() const {
  const Op o = op();
  auto wrap = [](const Expr& child, int min_prec) {
    std::string s = child.to_string();
    return precedence(child.op()) < min_prec ? "(" + s + ")" : s;
  };
  switch (o) {
    case Op::Literal: {
      const Rational& v = literal();
      std::string s = v.to_string();
      return (v.sign() == Sign::Negative || !v.is_integer()) ? "(" + s + ")" : s;
    }
    case Op::Sqrt: return "sqrt(" + lhs().to_string() + ")";
    case Op::Neg: return "-" + wrap(lhs(), 4);
    case Op::Add: return wrap(lhs(), 1) + " + " + wrap(rhs(), 2);
    case Op::Sub: return wrap(lhs(), 1) + " - " + wrap(rhs(), 2);
    case Op::Mul: return wrap(lhs(), 2) + "*" + wrap(rhs(), 3);
    case Op::Div: return wrap(lhs(), 2) + "/" + wrap(rhs(), 3);
  }
  return {};
}

bool structurally_equal(const Expr& a, const Expr& b) {
  std::map<std::pair<const void*, const void*>, bool> memo;
  auto rec = [&memo](auto&& self, const Expr& x, const Expr& y) -> bool {
    if (x.id() == y.id()) return true;
    if (x.op() != y.op()) return false;
    const auto key = std::make_pair(x.id(), y.id());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool eq = false;
    switch (x.op()) {
      case Expr::Op::Literal: eq = x.literal() == y.literal(); break;
      case Expr::Op::Sqrt:
      case Expr::Op::Neg: eq = self(self, x.lhs(), y.lhs()); break;
      default: eq = self(self, x.lhs(), y.lhs()) && self(self, x.rhs(), y.rhs()); break;
    }
    memo[key] = eq;
    return eq;
  };
  return rec(rec, a, b);
}

}  // namespace vexil
