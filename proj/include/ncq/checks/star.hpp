#pragma once

#include <cstddef>
#include <vector>

#include "ncq/algebra/normal_series.hpp"
#include "ncq/ordering/orderer.hpp"

namespace ncq {

// P(x_i, x_j): the classical projection of C_ij.  Zero for i == j.
CommPoly poisson_bracket(const CommutationSystem& sys, Letter i, Letter j);

// C_0..C_N of the star product induced by normal ordering: C_r(f, g) is
// layer r of mu(lift f, lift g).  Bilinear in f and g.
std::vector<CommPoly> star_coefficients(const Orderer& orderer, const CommPoly& f, const CommPoly& g);

struct StarRow {
  CommPoly f, g;
  std::vector<CommPoly> coefficients;
};

struct StarTable {
  std::size_t order = 0;
  std::vector<StarRow> rows;
};

StarTable star_table(const Orderer& orderer, const std::vector<std::pair<CommPoly, CommPoly>>& pairs);

}  // namespace ncq
