#include "ncq/dsl/ast.hpp"

#include <utility>

namespace ncq::dsl {

Expr Expr::make_number(mpq_class v, SourceLoc loc) {
  Expr e;
  e.kind = Kind::Number;
  e.number = std::move(v);
  e.number.canonicalize();
  e.loc = loc;
  return e;
}

Expr Expr::make_imag(SourceLoc loc) {
  Expr e;
  e.kind = Kind::Imag;
  e.loc = loc;
  return e;
}

Expr Expr::make_eps(SourceLoc loc) {
  Expr e;
  e.kind = Kind::Eps;
  e.loc = loc;
  return e;
}

Expr Expr::make_ident(std::string name, SourceLoc loc) {
  Expr e;
  e.kind = Kind::Ident;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::make_binary(Kind kind, Expr lhs, Expr rhs, SourceLoc loc) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  e.loc = loc;
  return e;
}

Expr Expr::make_neg(Expr operand, SourceLoc loc) {
  Expr e;
  e.kind = Kind::Neg;
  e.args.push_back(std::move(operand));
  e.loc = loc;
  return e;
}

Expr Expr::make_pow(Expr base, std::uint32_t exponent, SourceLoc loc) {
  Expr e;
  e.kind = Kind::Pow;
  e.exponent = exponent;
  e.args.push_back(std::move(base));
  e.loc = loc;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number:
      return a.number == b.number;
    case Expr::Kind::Ident:
      return a.name == b.name;
    case Expr::Kind::Pow:
      return a.exponent == b.exponent && a.args == b.args;
    default:
      return a.args == b.args;
  }
}

}  // namespace ncq::dsl
