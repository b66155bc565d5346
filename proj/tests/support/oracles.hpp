#pragma once

#include <cstdint>

#include "ncq/algebra/normal_series.hpp"
#include "ncq/ordering/commutation_system.hpp"

namespace ncq::test {

// g * x_i rewritten to x_i * g by literal adjacent transpositions,
// x_a x_i = x_i x_a + e C_{a i}.  Returns (g x_i - x_i g) / e, which must
// equal Cbrak(g, x_i).
inline EpsSeries move_left_correction(const CommutationSystem& sys, const Word& g, Letter i) {
  const std::size_t n = sys.order();
  EpsSeries correction(n);
  Word right;  // the part of g already passed, x_i sits before it
  for (std::size_t k = g.size(); k-- > 0;) {
    Word left = g.subword(0, k);
    // left * g_k * x_i * right  ->  left * x_i * g_k * right + e * left * C_{g_k i} * right
    correction += sys.c(g[k], i).left_mul(left).right_mul(right);
    right = Word{g[k]} * right;
  }
  return correction;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Closed-form normal ordering in the Weyl algebra with q p = p q + c e:
//   q^a p^b = sum_k k! C(a,k) C(b,k) (c e)^k p^{b-k} q^{a-k},   p = x1, q = x2.
inline NormalSeries weyl_normal_order(unsigned a, unsigned b, const GaussianRational& c, std::size_t order) {
  NormalSeries out(order);
  GaussianRational power = 1;
  std::uint64_t fact = 1;
  for (unsigned k = 0; k <= std::min(a, b) && k <= order; ++k) {
    if (k > 0) {
      power *= c;
      fact *= k;
    }
    auto count = static_cast<long>(fact * binomial(a, k) * binomial(b, k));
    out.layer(k).add_term(NormalMonomial({b - k, a - k}), power * GaussianRational(count));
  }
  return out;
}

}  // namespace ncq::test
