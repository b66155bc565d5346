#pragma once

#include <cstddef>
#include <vector>

#include "ncq/algebra/normal_series.hpp"
#include "ncq/ordering/orderer.hpp"

namespace ncq {

// residuals[k] = phi_inf([F, x_{k+1}]).
struct CentralityReport {
  std::size_t order = 0;
  std::vector<NormalSeries> residuals;
  bool central() const;
};

CentralityReport check_central(const Orderer& orderer, const EpsSeries& candidate);

}  // namespace ncq
