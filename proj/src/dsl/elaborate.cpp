#include "ncq/dsl/elaborate.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "ncq/dsl/parser.hpp"

namespace ncq::dsl {

namespace {

class Evaluator {
 public:
  Evaluator(const SystemSpec& spec, std::size_t order) : spec_(spec), order_(order) {
    for (std::size_t k = 0; k < spec.generators.size(); ++k) generators_[spec.generators[k]] = static_cast<Letter>(k + 1);
    for (const auto& p : spec.params) params_[p.name] = &p;
    for (const auto& d : spec.defs) defs_[d.name] = &d;
  }

  EpsSeries eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number:
        return EpsSeries(FreePoly(GaussianRational(e.number)), order_);
      case Expr::Kind::Imag:
        return EpsSeries(FreePoly(GaussianRational::imaginary_unit()), order_);
      case Expr::Kind::Eps:
        return EpsSeries::epsilon(order_);
      case Expr::Kind::Ident:
        return ident(e);
      case Expr::Kind::Add:
        return eval(e.args[0]) + eval(e.args[1]);
      case Expr::Kind::Sub:
        return eval(e.args[0]) - eval(e.args[1]);
      case Expr::Kind::Neg:
        return -eval(e.args[0]);
      case Expr::Kind::Mul:
        return eval(e.args[0]) * eval(e.args[1]);
      case Expr::Kind::Pow: {
        EpsSeries base = eval(e.args[0]);
        EpsSeries out(FreePoly(GaussianRational(1)), order_);
        for (std::uint32_t k = 0; k < e.exponent; ++k) out = out * base;
        return out;
      }
    }
    throw std::logic_error("unhandled expression kind");
  }

 private:
  EpsSeries ident(const Expr& e) {
    if (auto g = generators_.find(e.name); g != generators_.end())
      return EpsSeries::generator(g->second, order_);
    if (auto p = params_.find(e.name); p != params_.end())
      return EpsSeries(FreePoly(GaussianRational(p->second->value)), order_);
    if (auto d = defs_.find(e.name); d != defs_.end()) {
      auto memo = def_values_.find(e.name);
      if (memo != def_values_.end()) return memo->second;
      EpsSeries v = eval(d->second->value);
      def_values_.emplace(e.name, v);
      return v;
    }
    throw ParseError("undeclared identifier '" + e.name + "'", e.loc);
  }

  const SystemSpec& spec_;
  std::size_t order_;
  std::map<std::string, Letter> generators_;
  std::map<std::string, const ParamDecl*> params_;
  std::map<std::string, const DefDecl*> defs_;
  std::map<std::string, EpsSeries> def_values_;
};

}  // namespace

std::size_t effective_order(const SystemSpec& spec, std::optional<std::size_t> override_order) {
  if (override_order) return *override_order;
  return spec.order.value_or(kDefaultOrder);
}

ElaboratedSystem elaborate(const SystemSpec& spec, std::optional<std::size_t> override_order) {
  const std::size_t order = effective_order(spec, override_order);
  Evaluator eval(spec, order);
  CommutationSystem sys(spec.generators.size(), order, spec.generators);
  std::map<std::string, Letter> index;
  for (std::size_t k = 0; k < spec.generators.size(); ++k) index[spec.generators[k]] = static_cast<Letter>(k + 1);
  for (const auto& r : spec.relations) sys.set_commutator(index.at(r.lhs), index.at(r.rhs), eval.eval(r.value));
  ElaboratedSystem out{std::move(sys), {}};
  for (const auto& c : spec.central) out.central.push_back(eval.eval(c));
  return out;
}

EpsSeries elaborate_expr(const SystemSpec& spec, const Expr& expr, std::size_t order) {
  validate_expression(spec, expr);
  return Evaluator(spec, order).eval(expr);
}

}  // namespace ncq::dsl
