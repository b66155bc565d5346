#include "ncq/checks/centrality.hpp"

#include <algorithm>

namespace ncq {

bool CentralityReport::central() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const NormalSeries& r) { return r.is_zero(); });
}

CentralityReport check_central(const Orderer& orderer, const EpsSeries& candidate) {
  CentralityReport report;
  report.order = candidate.order();
  const auto n = static_cast<Letter>(orderer.system().size());
  for (Letter k = 1; k <= n; ++k)
    report.residuals.push_back(
        orderer.phi_inf(commutator(candidate, EpsSeries::generator(k, candidate.order()))));
  return report;
}

}  // namespace ncq
