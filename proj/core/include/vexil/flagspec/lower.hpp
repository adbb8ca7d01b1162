#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "vexil/expr.hpp"
#include "vexil/flagspec/ast.hpp"
#include "vexil/layout.hpp"

namespace vexil::flagspec {

using Bindings = std::map<std::string, Expr, std::less<>>;

/// `phi` becomes (1 + sqrt 5)/2. Throws SemanticError for unbound names and
/// flagspec::CertificationError for failed sqrt/division side conditions.
Expr lower_expression(const ExprAst& ast, const Bindings& env = {});

/// Canvas at the origin; regions and stars keep source order. Canvas and region sides must be certified positive.
FlagLayout lower(const SpecAst& ast, std::string provenance = "flag file");

/// tokenize + parse + lower; provenance is the path.
FlagLayout load_flag_file(const std::filesystem::path& path);

}  // namespace vexil::flagspec
