#pragma once

#include "vexil/expr.hpp"

/// Exact pentagon and golden-section constants. Angles are only ever
/// represented through their trigonometric values.
namespace vexil::constants {

const Expr& sqrt5();
/// (1 + sqrt 5) / 2
const Expr& phi();

/// sqrt(10 - 2 sqrt 5) / (1 + sqrt 5)
const Expr& tan36();
/// fourth_root(5) / sqrt(2 + sqrt 5), the second closed form of tan 36.
const Expr& tan36_quartic_form();
/// sqrt(10 + 2 sqrt 5) / (sqrt 5 - 1)
const Expr& tan72();

/// phi / 2
const Expr& cos36();
/// sqrt(10 - 2 sqrt 5) / 4
const Expr& sin36();
/// (phi - 1) / 2
const Expr& cos72();
/// sqrt(10 + 2 sqrt 5) / 4
const Expr& sin72();

}  // namespace vexil::constants
