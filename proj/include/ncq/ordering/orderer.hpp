#pragma once

#include <cstddef>
#include <memory>

#include "ncq/algebra/eps_series.hpp"
#include "ncq/algebra/normal_series.hpp"
#include "ncq/ordering/commutation_system.hpp"

namespace ncq {

// w = g * x_i * h with every letter of g strictly above i and every letter
// of h at or above i.  x_i is the leftmost occurrence of the minimal index.
struct Decomposition {
  Word g;
  Letter i = 0;
  Word h;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Throws std::invalid_argument for the empty word.
Decomposition lowest_factor_decomposition(const Word& w);

// Sum over r of g_1..g_{r-1} * C_{g_r, i} * g_{r+1}..g_m: the correction
// produced by moving x_i left past g.  Zero for g = 1.  Requires every
// letter of g to be strictly greater than i.
EpsSeries cbrak(const CommutationSystem& sys, const Word& g, Letter i);
EpsSeries cbrak(const CommutationSystem& sys, const Word& g, Letter i, std::size_t order);

struct CacheStats {
  std::size_t phi_entries = 0;
  std::size_t complete_entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
};

// The ordering maps of one commutation system, with a memo table keyed by
// (word, order).  All methods are const and safe to call concurrently.
class Orderer {
 public:
  static constexpr std::size_t kDefaultCacheLimit = 1U << 20;

  // cache_limit bounds the number of memoized words per table; 0 disables
  // memoization.
  explicit Orderer(CommutationSystem sys, std::size_t cache_limit = kDefaultCacheLimit);
  ~Orderer();
  Orderer(Orderer&&) noexcept;
  Orderer& operator=(Orderer&&) noexcept;

  const CommutationSystem& system() const { return sys_; }
  std::size_t order() const { return sys_.order(); }

  // One pass of lowest-factor reordering: layer 0 of the result is normal
  // ordered, the e-tail of the input is returned unchanged.
  EpsSeries phi(const Word& w) const;
  EpsSeries phi(const EpsSeries& f) const;
  EpsSeries delta(const EpsSeries& f) const;

  // phi applied layer by layer: layers 0..r-1 of the result are normal
  // ordered.  r is clamped to order() + 1.
  EpsSeries phi_r(const EpsSeries& f, std::size_t r) const;

  // Complete ordering map.  Input orders up to order() are accepted; the
  // result has the input's order.
  NormalSeries phi_inf(const Word& w) const;
  NormalSeries phi_inf(const EpsSeries& f) const;

  // mu(f, g) = phi_inf(f g).
  NormalSeries mu(const NormalSeries& f, const NormalSeries& g) const;

  CacheStats cache_stats() const;

 private:
  struct Cache;

  std::shared_ptr<const EpsSeries> phi_word(const Word& w, std::size_t order) const;
  std::shared_ptr<const NormalSeries> complete_word(const Word& w, std::size_t order) const;
  void check_order(std::size_t order) const;

  CommutationSystem sys_;
  std::unique_ptr<Cache> cache_;
};

struct HexagonRoutes {
  EpsSeries lowest_first;   // x1 moved left first: x1x2x3 + e(x1C32 + x3C21 + C31x2)
  EpsSeries highest_right;  // x3 pushed right first: x1x2x3 + e(C21x3 + x2C31 + C32x1)
};

// Both reorderings of x3x2x1 with the commutators substituted.  Requires at
// least three generators.
HexagonRoutes hexagon_routes(const CommutationSystem& sys);
EpsSeries hexagon_difference(const CommutationSystem& sys);

}  // namespace ncq
