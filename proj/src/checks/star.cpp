#include "ncq/checks/star.hpp"

namespace ncq {

CommPoly poisson_bracket(const CommutationSystem& sys, Letter i, Letter j) {
  if (i == j) return {};
  return project_classical(sys.c(i, j));
}

std::vector<CommPoly> star_coefficients(const Orderer& orderer, const CommPoly& f, const CommPoly& g) {
  const std::size_t n = orderer.order();
  NormalSeries product = orderer.mu(lift_normal(f, n), lift_normal(g, n));
  return product.layers();
}

StarTable star_table(const Orderer& orderer, const std::vector<std::pair<CommPoly, CommPoly>>& pairs) {
  StarTable table;
  table.order = orderer.order();
  for (const auto& [f, g] : pairs) table.rows.push_back({f, g, star_coefficients(orderer, f, g)});
  return table;
}

}  // namespace ncq
