#include "ncq/checks/pbw_oracle.hpp"

#include <vector>

namespace ncq {

namespace {

struct Pending {
  Word word;
  std::size_t layer;
  GaussianRational coef;
};

}  // namespace

NormalSeries adjacent_inversion_order(const CommutationSystem& sys, const EpsSeries& f) {
  if (!sys.is_constant())
    throw OracleUnavailable("adjacent-inversion oracle needs constant commutators");
  if (f.order() > sys.order()) throw IncompatibleOrder(sys.order(), f.order());
  const std::size_t n = f.order();

  std::vector<Pending> work;
  for (std::size_t r = 0; r <= n; ++r)
    for (const auto& [w, c] : f.layer(r).terms()) work.push_back({w, r, c});

  NormalSeries out(n);
  while (!work.empty()) {
    Pending t = std::move(work.back());
    work.pop_back();
    std::size_t p = 0;
    while (p + 1 < t.word.size() && t.word[p] <= t.word[p + 1]) ++p;
    if (p + 1 >= t.word.size()) {
      out.layer(t.layer).add_term(NormalMonomial::from_word(t.word), t.coef);
      continue;
    }
    const Letter hi = t.word[p], lo = t.word[p + 1];
    Word prefix = t.word.subword(0, p);
    Word suffix = t.word.subword(p + 2, t.word.size() - p - 2);
    work.push_back({prefix * Word{lo, hi} * suffix, t.layer, t.coef});
    EpsSeries c = sys.c(hi, lo, n);
    for (std::size_t s = 0; t.layer + 1 + s <= n; ++s)
      for (const auto& [cw, cc] : c.layer(s).terms())
        work.push_back({prefix * cw * suffix, t.layer + 1 + s, t.coef * cc});
  }
  return out;
}

NormalSeries pbw_oracle_compare(const Orderer& orderer, const Word& w) {
  const std::size_t n = orderer.order();
  return adjacent_inversion_order(orderer.system(), EpsSeries(FreePoly(w), n)) - orderer.phi_inf(w);
}

}  // namespace ncq
