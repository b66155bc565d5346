#pragma once

#include <string>
#include <vector>

#include "ncq/algebra/gaussian_rational.hpp"

namespace ncq::render {

// One signed term: coefficient times an already-rendered monomial ("1" for
// the unit).
struct Term {
  GaussianRational coef;
  std::string monomial;
};

// Joins terms as "a*w - b*v + ..."; "0" when empty.
std::string sum(const std::vector<Term>& terms);

// layers[r] holds the terms multiplying e^r.  Single-term layers inline the
// power of e into the term; multi-term layers render as "e^r*(...)".
std::string layered(const std::vector<std::vector<Term>>& layers);

std::string eps_power(std::size_t r);

}  // namespace ncq::render
