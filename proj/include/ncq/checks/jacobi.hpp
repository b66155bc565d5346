#pragma once

#include <cstddef>
#include <vector>

#include "ncq/algebra/normal_series.hpp"
#include "ncq/ordering/orderer.hpp"

namespace ncq {

// phi_inf([x_i, C_jk] + [x_j, C_ki] + [x_k, C_ij]) for 1 <= i < j < k <= n.
NormalSeries jacobi_residual(const Orderer& orderer, Letter i, Letter j, Letter k);

struct JacobiEntry {
  Letter i, j, k;
  NormalSeries residual;
  bool passed() const { return residual.is_zero(); }
};

// Verdicts hold through e^order only.
struct JacobiReport {
  std::size_t order = 0;
  std::vector<JacobiEntry> entries;  // lexicographic in (i, j, k)
  // True when no triple exists (n < 3).
  bool vacuous() const { return entries.empty(); }
  bool passed() const;
};

JacobiReport check_jacobi(const Orderer& orderer, std::size_t threads = 1);

}  // namespace ncq
