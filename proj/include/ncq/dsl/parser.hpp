#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ncq/dsl/ast.hpp"

namespace ncq::dsl {

// Lexical, syntax or semantic error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceLoc loc);
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  SourceLoc loc_;
};

// Parses and validates a whole .ncq file: unique names, declared
// identifiers, at most one relation per unordered pair, acyclic defs.
SystemSpec parse_system(std::string_view text);

// Parses a standalone expression (no trailing ';').
Expr parse_expression(std::string_view text);

// Checks that every identifier in expr names a generator, param or def of spec.
void validate_expression(const SystemSpec& spec, const Expr& expr);

}  // namespace ncq::dsl
