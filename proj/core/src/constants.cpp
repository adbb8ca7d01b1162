#include "vexil/constants.hpp"

namespace vexil::constants {

const Expr& sqrt5() {
  static const Expr v = sqrt(Expr(5));
  return v;
}

const Expr& phi() {
  static const Expr v = (Expr(1) + sqrt5()) / Expr(2);
  return v;
}

const Expr& tan36() {
  static const Expr v = sqrt(Expr(10) - Expr(2) * sqrt5()) / (Expr(1) + sqrt5());
  return v;
}

const Expr& tan36_quartic_form() {
  static const Expr v = sqrt(sqrt5()) / sqrt(Expr(2) + sqrt5());
  return v;
}

const Expr& tan72() {
  static const Expr v = sqrt(Expr(10) + Expr(2) * sqrt5()) / (sqrt5() - Expr(1));
  return v;
}

const Expr& cos36() {
  static const Expr v = phi() / Expr(2);
  return v;
}

const Expr& sin36() {
  static const Expr v = sqrt(Expr(10) - Expr(2) * sqrt5()) / Expr(4);
  return v;
}

const Expr& cos72() {
  static const Expr v = (phi() - Expr(1)) / Expr(2);
  return v;
}

const Expr& sin72() {
  static const Expr v = sqrt(Expr(10) + Expr(2) * sqrt5()) / Expr(4);
  return v;
}

}  // namespace vexil::constants
