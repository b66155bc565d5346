#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncq/algebra/normal_series.hpp"
#include "ncq/ordering/orderer.hpp"

namespace ncq {

struct AssocSample {
  NormalMonomial f, g, h;
  bool generator_triple = false;
};

struct AssocFailure {
  std::size_t sample;  // index into AssocReport::samples
  // mu(f, mu(g, h)) - mu(mu(f, g), h)
  NormalSeries discrepancy;
};

struct AssocReport {
  std::size_t order = 0;
  std::uint64_t seed = 0;
  std::vector<AssocSample> samples;
  std::vector<AssocFailure> failures;  // ascending sample index
  bool passed() const { return failures.empty(); }
};

// mu(f, mu(g, h)) - mu(mu(f, g), h) for normal-ordered monomials.
NormalSeries associator(const Orderer& orderer, const NormalMonomial& f, const NormalMonomial& g,
                        const NormalMonomial& h);

// Every generator triple (x_i, x_j, x_k) first, then `count` random triples
// of normal-ordered monomials with lengths uniform in 1..max_len.
// Deterministic in seed.
AssocReport check_associativity(const Orderer& orderer, std::size_t max_len, std::size_t count,
                                std::uint64_t seed, std::size_t threads = 1);

}  // namespace ncq
