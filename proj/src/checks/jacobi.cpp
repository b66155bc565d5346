#include "ncq/checks/jacobi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ncq/checks/parallel.hpp"

namespace ncq {

NormalSeries jacobi_residual(const Orderer& orderer, Letter i, Letter j, Letter k) {
  const auto& sys = orderer.system();
  if (!(1 <= i && i < j && j < k && k <= sys.size()))
    throw std::invalid_argument("jacobi triple (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ") must satisfy 1 <= i < j < k <= " +
                                std::to_string(sys.size()));
  const std::size_t n = sys.order();
  auto x = [n](Letter l) { return EpsSeries::generator(l, n); };
  EpsSeries sum = commutator(x(i), sys.c(j, k)) + commutator(x(j), sys.c(k, i)) +
                  commutator(x(k), sys.c(i, j));
  return orderer.phi_inf(sum);
}

bool JacobiReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const JacobiEntry& e) { return e.passed(); });
}

JacobiReport check_jacobi(const Orderer& orderer, std::size_t threads) {
  JacobiReport report;
  report.order = orderer.order();
  const auto n = static_cast<Letter>(orderer.system().size());
  for (Letter i = 1; i <= n; ++i)
    for (Letter j = i + 1; j <= n; ++j)
      for (Letter k = j + 1; k <= n; ++k) report.entries.push_back({i, j, k, NormalSeries(report.order)});
  detail::parallel_for(report.entries.size(), threads, [&](std::size_t idx) {
    auto& e = report.entries[idx];
    e.residual = jacobi_residual(orderer, e.i, e.j, e.k);
  });
  return report;
}

}  // namespace ncq
