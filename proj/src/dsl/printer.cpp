#include "ncq/dsl/printer.hpp"

namespace ncq::dsl {

namespace {

// Binding strength: sums 1, products 2, powers 3, atoms 4.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Neg:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    case Expr::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string emit(const Expr& e, int context);

std::string wrap(const Expr& e, int context, std::string body) {
  return precedence(e) < context ? "(" + body + ")" : body;
}

std::string emit(const Expr& e, int context) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number.get_str();
    case Expr::Kind::Imag:
      return "i";
    case Expr::Kind::Eps:
      return "e";
    case Expr::Kind::Ident:
      return e.name;
    case Expr::Kind::Add:
      return wrap(e, context, emit(e.args[0], 1) + " + " + emit(e.args[1], 2));
    case Expr::Kind::Sub:
      return wrap(e, context, emit(e.args[0], 1) + " - " + emit(e.args[1], 2));
    case Expr::Kind::Neg:
      return wrap(e, context, "-" + emit(e.args[0], 2));
    case Expr::Kind::Mul:
      return wrap(e, context, emit(e.args[0], 2) + "*" + emit(e.args[1], 3));
    case Expr::Kind::Pow:
      return wrap(e, context, emit(e.args[0], 4) + "^" + std::to_string(e.exponent));
  }
  return {};
}

}  // namespace

std::string print(const Expr& e) { return emit(e, 1); }

std::string print(const SystemSpec& spec) {
  std::string out = "generators ";
  for (std::size_t k = 0; k < spec.generators.size(); ++k) {
    if (k) out += ", ";
    out += spec.generators[k];
  }
  out += ";\n";
  for (const auto& p : spec.params) out += "param " + p.name + " = " + p.value.get_str() + ";\n";
  for (const auto& d : spec.defs) out += "def " + d.name + " = " + print(d.value) + ";\n";
  for (const auto& r : spec.relations)
    out += "comm [" + r.lhs + ", " + r.rhs + "] = " + print(r.value) + ";\n";
  for (const auto& c : spec.central) out += "central " + print(c) + ";\n";
  if (spec.order) out += "order " + std::to_string(*spec.order) + ";\n";
  return out;
}

}  // namespace ncq::dsl
