#include "ncq/ordering/orderer.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ncq {

namespace {

// s (at any order <= target - k) multiplied by e^k and viewed at `target`.
EpsSeries shift_into(const EpsSeries& s, std::size_t target, std::size_t k) {
  EpsSeries out(target);
  for (std::size_t r = 0; r <= s.order() && r + k <= target; ++r) out.layer(r + k) = s.layer(r);
  return out;
}

void add_scaled(EpsSeries& acc, const EpsSeries& v, std::size_t shift, const GaussianRational& c) {
  for (std::size_t r = 0; r <= v.order() && r + shift <= acc.order(); ++r)
    for (const auto& [w, x] : v.layer(r).terms()) acc.layer(r + shift).add_term(w, x * c);
}

struct Key {
  Word word;
  std::size_t order;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const { return k.word.hash() * 1315423911U + k.order; }
};

}  // namespace

Decomposition lowest_factor_decomposition(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lowest factor decomposition of the empty word");
  auto letters = w.letters();
  auto pos = static_cast<std::size_t>(std::min_element(letters.begin(), letters.end()) - letters.begin());
  return {w.subword(0, pos), letters[pos], w.subword(pos + 1, w.size() - pos - 1)};
}

EpsSeries cbrak(const CommutationSystem& sys, const Word& g, Letter i) {
  return cbrak(sys, g, i, sys.order());
}

EpsSeries cbrak(const CommutationSystem& sys, const Word& g, Letter i, std::size_t order) {
  for (Letter l : g.letters()) {
    if (l <= i)
      throw std::invalid_argument("cbrak: letter " + sys.name(l) + " is not above " + sys.name(i));
  }
  EpsSeries out(order);
  for (std::size_t r = 0; r < g.size(); ++r) {
    EpsSeries c = sys.c(g[r], i, order);
    if (c.is_zero()) continue;
    out += c.left_mul(g.subword(0, r)).right_mul(g.subword(r + 1, g.size() - r - 1));
  }
  return out;
}

struct Orderer::Cache {
  std::size_t limit;
  mutable std::mutex mutex;
  std::unordered_map<Key, std::shared_ptr<const EpsSeries>, KeyHash> phi;
  std::unordered_map<Key, std::shared_ptr<const NormalSeries>, KeyHash> complete;
  std::size_t hits = 0;
  std::size_t misses = 0;

  template <class Map>
  typename Map::mapped_type find(Map& m, const Key& k) {
    if (limit == 0) return nullptr;
    std::lock_guard lock(mutex);
    auto it = m.find(k);
    if (it == m.end()) {
      ++misses;
      return nullptr;
    }
    ++hits;
    return it->second;
  }

  template <class Map>
  void store(Map& m, Key k, typename Map::mapped_type v) {
    if (limit == 0) return;
    std::lock_guard lock(mutex);
    if (m.size() >= limit) m.clear();
    m.emplace(std::move(k), std::move(v));
  }
};

Orderer::Orderer(CommutationSystem sys, std::size_t cache_limit)
    : sys_(std::move(sys)), cache_(std::make_unique<Cache>()) {
  cache_->limit = cache_limit;
}

Orderer::~Orderer() = default;
Orderer::Orderer(Orderer&&) noexcept = default;
Orderer& Orderer::operator=(Orderer&&) noexcept = default;

void Orderer::check_order(std::size_t order) const {
  if (order > sys_.order()) throw IncompatibleOrder(sys_.order(), order);
}

std::shared_ptr<const EpsSeries> Orderer::phi_word(const Word& w, std::size_t order) const {
  if (w.is_normal_ordered()) return std::make_shared<const EpsSeries>(FreePoly(w), order);
  Key key{w, order};
  if (auto hit = cache_->find(cache_->phi, key)) return hit;

  // phi(g x_i h) = x_i phi(g h) + e Cbrak(g, x_i) h
  auto [g, i, h] = lowest_factor_decomposition(w);
  EpsSeries out = phi_word(g * h, order)->left_mul(Word{i});
  if (order >= 1) out += shift_into(cbrak(sys_, g, i, order - 1).right_mul(h), order, 1);

  auto value = std::make_shared<const EpsSeries>(std::move(out));
  cache_->store(cache_->phi, std::move(key), value);
  return value;
}

std::shared_ptr<const NormalSeries> Orderer::complete_word(const Word& w, std::size_t order) const {
  if (w.is_normal_ordered())
    return std::make_shared<const NormalSeries>(CommPoly(NormalMonomial::from_word(w)), order);
  Key key{w, order};
  if (auto hit = cache_->find(cache_->complete, key)) return hit;

  // phi_inf(e^k u) = e^k phi_inf(u), so each tail word is completed at the
  // remaining order.
  auto once = phi_word(w, order);
  NormalSeries out(order);
  for (const auto& [u, c] : once->layer(0).terms()) out.layer(0).add_term(NormalMonomial::from_word(u), c);
  for (std::size_t k = 1; k <= order; ++k)
    for (const auto& [u, c] : once->layer(k).terms()) out.add_shifted(*complete_word(u, order - k), k, c);

  auto value = std::make_shared<const NormalSeries>(std::move(out));
  cache_->store(cache_->complete, std::move(key), value);
  return value;
}

EpsSeries Orderer::phi(const Word& w) const { return *phi_word(w, order()); }

EpsSeries Orderer::phi(const EpsSeries& f) const {
  check_order(f.order());
  EpsSeries out = f;
  out.layer(0) = FreePoly{};
  for (const auto& [w, c] : f.layer(0).terms()) add_scaled(out, *phi_word(w, f.order()), 0, c);
  return out;
}

EpsSeries Orderer::delta(const EpsSeries& f) const { return phi(f) - f; }

EpsSeries Orderer::phi_r(const EpsSeries& f, std::size_t r) const {
  check_order(f.order());
  const std::size_t n = f.order();
  EpsSeries cur = f;
  for (std::size_t s = 0; s < std::min(r, n + 1); ++s) {
    FreePoly pending = std::move(cur.layer(s));
    cur.layer(s) = FreePoly{};
    for (const auto& [w, c] : pending.terms()) add_scaled(cur, *phi_word(w, n - s), s, c);
  }
  return cur;
}

NormalSeries Orderer::phi_inf(const Word& w) const { return *complete_word(w, order()); }

NormalSeries Orderer::phi_inf(const EpsSeries& f) const {
  check_order(f.order());
  const std::size_t n = f.order();
  NormalSeries out(n);
  for (std::size_t r = 0; r <= n; ++r)
    for (const auto& [w, c] : f.layer(r).terms()) out.add_shifted(*complete_word(w, n - r), r, c);
  return out;
}

NormalSeries Orderer::mu(const NormalSeries& f, const NormalSeries& g) const {
  if (f.order() != g.order()) throw IncompatibleOrder(f.order(), g.order());
  return phi_inf(f.embed() * g.embed());
}

CacheStats Orderer::cache_stats() const {
  std::lock_guard lock(cache_->mutex);
  return {cache_->phi.size(), cache_->complete.size(), cache_->hits, cache_->misses};
}

HexagonRoutes hexagon_routes(const CommutationSystem& sys) {
  if (sys.size() < 3) throw std::invalid_argument("the hexagon needs at least three generators");
  const std::size_t n = sys.order();
  const Word x1{1}, x2{2}, x3{3};
  EpsSeries base(FreePoly(Word{1, 2, 3}), n);
  EpsSeries first = sys.c(3, 2).left_mul(x1) + sys.c(2, 1).left_mul(x3) + sys.c(3, 1).right_mul(x2);
  EpsSeries second = sys.c(2, 1).right_mul(x3) + sys.c(3, 1).left_mul(x2) + sys.c(3, 2).right_mul(x1);
  return {base + first.shifted(1), base + second.shifted(1)};
}

EpsSeries hexagon_difference(const CommutationSystem& sys) {
  auto routes = hexagon_routes(sys);
  return routes.lowest_first - routes.highest_right;
}

}  // namespace ncq
