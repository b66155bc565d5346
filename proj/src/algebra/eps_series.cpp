#include "ncq/algebra/eps_series.hpp"

#include <algorithm>
#include <utility>

#include "ncq/algebra/render.hpp"

namespace ncq {

IncompatibleOrder::IncompatibleOrder(std::size_t a, std::size_t b)
    : std::invalid_argument("incompatible truncation orders: " + std::to_string(a) +
                            " vs " + std::to_string(b)) {}

namespace {

void require_same_order(const EpsSeries& a, const EpsSeries& b) {
  if (a.order() != b.order()) throw IncompatibleOrder(a.order(), b.order());
}

}  // namespace

EpsSeries::EpsSeries(FreePoly layer0, std::size_t order) : layers_(order + 1) {
  layers_[0] = std::move(layer0);
}

EpsSeries EpsSeries::epsilon(std::size_t order) {
  EpsSeries s(order);
  if (order >= 1) s.layers_[1] = FreePoly(GaussianRational(1));
  return s;
}

bool EpsSeries::is_zero() const {
  return std::all_of(layers_.begin(), layers_.end(), [](const FreePoly& p) { return p.is_zero(); });
}

Letter EpsSeries::max_letter() const {
  Letter m = 0;
  for (const auto& p : layers_) m = std::max(m, p.max_letter());
  return m;
}

bool EpsSeries::is_constant() const {
  return std::all_of(layers_.begin(), layers_.end(), [](const FreePoly& p) { return p.is_constant(); });
}

EpsSeries EpsSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw IncompatibleOrder(this->order(), order);
  EpsSeries out(order);
  std::copy_n(layers_.begin(), order + 1, out.layers_.begin());
  return out;
}

EpsSeries EpsSeries::shifted(std::size_t k) const {
  EpsSeries out(order());
  for (std::size_t r = 0; r + k <= order(); ++r) out.layers_[r + k] = layers_[r];
  return out;
}

EpsSeries& EpsSeries::operator+=(const EpsSeries& o) {
  require_same_order(*this, o);
  for (std::size_t r = 0; r < layers_.size(); ++r) layers_[r] += o.layers_[r];
  return *this;
}

EpsSeries& EpsSeries::operator-=(const EpsSeries& o) {
  require_same_order(*this, o);
  for (std::size_t r = 0; r < layers_.size(); ++r) layers_[r] -= o.layers_[r];
  return *this;
}

EpsSeries& EpsSeries::operator*=(const GaussianRational& c) {
  for (auto& p : layers_) p *= c;
  return *this;
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries out = *this;
  for (auto& p : out.layers_) p = -p;
  return out;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  EpsSeries out(n);
  for (std::size_t r = 0; r <= n; ++r) {
    if (a.layers_[r].is_zero()) continue;
    for (std::size_t s = 0; r + s <= n; ++s) {
      if (b.layers_[s].is_zero()) continue;
      out.layers_[r + s] += a.layers_[r] * b.layers_[s];
    }
  }
  return out;
}

EpsSeries series_mul(const EpsSeries& a, const EpsSeries& b) { return a * b; }

EpsSeries commutator(const EpsSeries& a, const EpsSeries& b) { return a * b - b * a; }

EpsSeries EpsSeries::left_mul(const Word& w) const {
  EpsSeries out(order());
  for (std::size_t r = 0; r < layers_.size(); ++r) out.layers_[r] = layers_[r].left_mul(w);
  return out;
}

EpsSeries EpsSeries::right_mul(const Word& w) const {
  EpsSeries out(order());
  for (std::size_t r = 0; r < layers_.size(); ++r) out.layers_[r] = layers_[r].right_mul(w);
  return out;
}

std::string EpsSeries::to_string(const NameTable& names) const {
  std::vector<std::vector<render::Term>> layers(layers_.size());
  for (std::size_t r = 0; r < layers_.size(); ++r)
    for (const auto& [w, c] : layers_[r].terms()) layers[r].push_back({c, w.to_string(names)});
  return render::layered(layers);
}

}  // namespace ncq
