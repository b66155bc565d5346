#include "ncq/checks/associativity.hpp"

#include <random>
#include <stdexcept>

#include "ncq/checks/parallel.hpp"

namespace ncq {

namespace {

NormalMonomial random_monomial(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> length(1, max_len);
  std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(n));
  Word w;
  for (std::size_t k = length(rng); k > 0; --k) w.push_back(letter(rng));
  return NormalMonomial::from_word(w);
}

}  // namespace

NormalSeries associator(const Orderer& orderer, const NormalMonomial& f, const NormalMonomial& g,
                        const NormalMonomial& h) {
  const std::size_t n = orderer.order();
  NormalSeries lf = lift_normal(CommPoly(f), n);
  NormalSeries lg = lift_normal(CommPoly(g), n);
  NormalSeries lh = lift_normal(CommPoly(h), n);
  return orderer.mu(lf, orderer.mu(lg, lh)) - orderer.mu(orderer.mu(lf, lg), lh);
}

AssocReport check_associativity(const Orderer& orderer, std::size_t max_len, std::size_t count,
                                std::uint64_t seed, std::size_t threads) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  if (count < 1) throw std::invalid_argument("sample count must be at least 1");
  AssocReport report;
  report.order = orderer.order();
  report.seed = seed;

  const std::size_t n = orderer.system().size();
  for (Letter i = 1; i <= n; ++i)
    for (Letter j = 1; j <= n; ++j)
      for (Letter k = 1; k <= n; ++k)
        report.samples.push_back({NormalMonomial::generator(i), NormalMonomial::generator(j),
                                  NormalMonomial::generator(k), true});

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < count; ++s) {
    auto f = random_monomial(rng, n, max_len);
    auto g = random_monomial(rng, n, max_len);
    auto h = random_monomial(rng, n, max_len);
    report.samples.push_back({f, g, h, false});
  }

  std::vector<NormalSeries> results(report.samples.size());
  detail::parallel_for(report.samples.size(), threads, [&](std::size_t k) {
    const auto& s = report.samples[k];
    results[k] = associator(orderer, s.f, s.g, s.h);
  });
  for (std::size_t k = 0; k < results.size(); ++k)
    if (!results[k].is_zero()) report.failures.push_back({k, std::move(results[k])});
  return report;
}

}  // namespace ncq
