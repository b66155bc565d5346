#pragma once

#include <string>

#include "ncq/dsl/ast.hpp"

namespace ncq::dsl {

// Minimal-parenthesis rendering; parse_expression(print(e)) == e.
std::string print(const Expr& e);

// Canonical file text: generators, params, defs, relations, central
// candidates, order; one statement per line.
std::string print(const SystemSpec& spec);

}  // namespace ncq::dsl
