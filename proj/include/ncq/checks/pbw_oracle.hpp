#pragma once

#include <stdexcept>

#include "ncq/algebra/normal_series.hpp"
#include "ncq/ordering/orderer.hpp"

namespace ncq {

// Raised when the adjacent-inversion oracle is asked about a system with
// non-constant commutators, where its agreement with phi_inf is not known.
class OracleUnavailable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Normal-orders f by rewriting the leftmost adjacent inversion
// x_j x_i -> x_i x_j + e C_ji (j > i) until none remain.  Constant C only.
NormalSeries adjacent_inversion_order(const CommutationSystem& sys, const EpsSeries& f);

// adjacent_inversion_order(w) - phi_inf(w); zero for PBW-type systems.
NormalSeries pbw_oracle_compare(const Orderer& orderer, const Word& w);

}  // namespace ncq
