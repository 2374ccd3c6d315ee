#pragma once

#include "sextic/exact.hpp"

#include <map>
#include <optional>
#include <string>

namespace sextic {

// Symbol values for formula templates; an empty optional marks an undefined constant.
using ExprEnv = std::map<std::string, std::optional<Rat>>;

// Evaluates a template over the symbols th, m and the env names; + - * / ^ and parentheses.
// Division is allowed only by rational values; exponents are nonnegative integer literals.
SexticNum eval_expr(const std::string& text, const Int& m, const ExprEnv& env);

// Same, for an expression in th^2 only, read as an element of Q(m^{1/3}).
CubicNum eval_cubic_expr(const std::string& text, const Int& m, const ExprEnv& env);

}  // namespace sextic
