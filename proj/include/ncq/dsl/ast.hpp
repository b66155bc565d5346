#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncq::dsl {

struct SourceLoc {
  std::size_t line = 1;
  std::size_t column = 1;
};

// Expression tree of the .ncq language.  Equality is structural and ignores
// source locations.
struct Expr {
  enum class Kind { Number, Imag, Eps, Ident, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Number;
  mpq_class number;             // Number
  std::string name;             // Ident
  std::uint32_t exponent = 0;   // Pow
  std::vector<Expr> args;       // operands
  SourceLoc loc;

  static Expr make_number(mpq_class v, SourceLoc loc = {});
  static Expr make_imag(SourceLoc loc = {});
  static Expr make_eps(SourceLoc loc = {});
  static Expr make_ident(std::string name, SourceLoc loc = {});
  static Expr make_binary(Kind kind, Expr lhs, Expr rhs, SourceLoc loc = {});
  static Expr make_neg(Expr operand, SourceLoc loc = {});
  static Expr make_pow(Expr base, std::uint32_t exponent, SourceLoc loc = {});

  friend bool operator==(const Expr& a, const Expr& b);
};

struct ParamDecl {
  std::string name;
  mpq_class value;
  SourceLoc loc;
  friend bool operator==(const ParamDecl& a, const ParamDecl& b) {
    return a.name == b.name && a.value == b.value;
  }
};

struct DefDecl {
  std::string name;
  Expr value;
  SourceLoc loc;
  friend bool operator==(const DefDecl& a, const DefDecl& b) {
    return a.name == b.name && a.value == b.value;
  }
};

// comm [lhs, rhs] = value;  meaning [lhs, rhs] = e * value.
struct RelationDecl {
  std::string lhs, rhs;
  Expr value;
  SourceLoc loc, lhs_loc, rhs_loc;
  friend bool operator==(const RelationDecl& a, const RelationDecl& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.value == b.value;
  }
};

// Equality is structural: source locations are ignored.
struct SystemSpec {
  std::vector<std::string> generators;
  std::vector<SourceLoc> generator_locs;
  std::vector<ParamDecl> params;
  std::vector<DefDecl> defs;
  std::vector<RelationDecl> relations;
  std::vector<Expr> central;
  std::optional<std::size_t> order;

  friend bool operator==(const SystemSpec& a, const SystemSpec& b) {
    return a.generators == b.generators && a.params == b.params && a.defs == b.defs &&
           a.relations == b.relations && a.central == b.central && a.order == b.order;
  }
};

}  // namespace ncq::dsl
