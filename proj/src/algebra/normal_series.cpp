#include "ncq/algebra/normal_series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ncq/algebra/render.hpp"

namespace ncq {

NormalMonomial::NormalMonomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)) {
  trim();
}

void NormalMonomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

NormalMonomial NormalMonomial::from_word(const Word& w) {
  NormalMonomial m;
  m.exps_.assign(w.max_letter(), 0);
  for (Letter l : w.letters()) ++m.exps_[l - 1];
  return m;
}

NormalMonomial NormalMonomial::generator(Letter k) {
  std::vector<std::uint32_t> e(k, 0);
  e[k - 1] = 1;
  return NormalMonomial(std::move(e));
}

std::uint32_t NormalMonomial::exponent(Letter k) const {
  return k >= 1 && k <= exps_.size() ? exps_[k - 1] : 0;
}

std::uint32_t NormalMonomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Word NormalMonomial::to_word() const {
  std::vector<Letter> letters;
  letters.reserve(degree());
  for (std::size_t k = 0; k < exps_.size(); ++k)
    letters.insert(letters.end(), exps_[k], static_cast<Letter>(k + 1));
  return Word(std::move(letters));
}

NormalMonomial operator*(const NormalMonomial& a, const NormalMonomial& b) {
  std::vector<std::uint32_t> e(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t k = 0; k < a.exps_.size(); ++k) e[k] += a.exps_[k];
  for (std::size_t k = 0; k < b.exps_.size(); ++k) e[k] += b.exps_[k];
  return NormalMonomial(std::move(e));
}

std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return db <=> da;
  // Higher exponent on a lower index sorts first, matching sorted-word lex.
  std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t k = 0; k < n; ++k) {
    auto ea = k < a.exps_.size() ? a.exps_[k] : 0U;
    auto eb = k < b.exps_.size() ? b.exps_[k] : 0U;
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

CommPoly::CommPoly(GaussianRational scalar) {
  if (!scalar.is_zero()) terms_.emplace(NormalMonomial{}, std::move(scalar));
}

CommPoly::CommPoly(const NormalMonomial& m, GaussianRational coef) {
  if (!coef.is_zero()) terms_.emplace(m, std::move(coef));
}

GaussianRational CommPoly::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void CommPoly::add_term(const NormalMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool CommPoly::is_homogeneous(std::uint32_t d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

FreePoly CommPoly::embed() const {
  FreePoly out;
  for (const auto& [m, c] : terms_) out.add_term(m.to_word(), c);
  return out;
}

std::string CommPoly::to_string(const NameTable& names) const {
  std::vector<render::Term> terms;
  for (const auto& [m, c] : terms_) terms.push_back({c, m.to_string(names)});
  return render::sum(terms);
}

NormalSeries::NormalSeries(CommPoly layer0, std::size_t order) : layers_(order + 1) {
  layers_[0] = std::move(layer0);
}

bool NormalSeries::is_zero() const {
  return std::all_of(layers_.begin(), layers_.end(), [](const CommPoly& p) { return p.is_zero(); });
}

NormalSeries NormalSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw IncompatibleOrder(this->order(), order);
  NormalSeries out(order);
  std::copy_n(layers_.begin(), order + 1, out.layers_.begin());
  return out;
}

NormalSeries NormalSeries::shifted(std::size_t k) const {
  NormalSeries out(order());
  for (std::size_t r = 0; r + k <= order(); ++r) out.layers_[r + k] = layers_[r];
  return out;
}

NormalSeries& NormalSeries::operator+=(const NormalSeries& o) {
  if (order() != o.order()) throw IncompatibleOrder(order(), o.order());
  for (std::size_t r = 0; r < layers_.size(); ++r) layers_[r] += o.layers_[r];
  return *this;
}

NormalSeries& NormalSeries::operator-=(const NormalSeries& o) {
  if (order() != o.order()) throw IncompatibleOrder(order(), o.order());
  for (std::size_t r = 0; r < layers_.size(); ++r) layers_[r] -= o.layers_[r];
  return *this;
}

NormalSeries& NormalSeries::operator*=(const GaussianRational& c) {
  for (auto& p : layers_) p *= c;
  return *this;
}

void NormalSeries::add_shifted(const NormalSeries& value, std::size_t shift,
                               const GaussianRational& c) {
  for (std::size_t r = 0; r < value.layers_.size() && r + shift <= order(); ++r)
    for (const auto& [m, v] : value.layers_[r].terms()) layers_[r + shift].add_term(m, v * c);
}

EpsSeries NormalSeries::embed() const {
  EpsSeries out(order());
  for (std::size_t r = 0; r < layers_.size(); ++r) out.layer(r) = layers_[r].embed();
  return out;
}

NormalSeries NormalSeries::from_normal_ordered(const EpsSeries& s) {
  NormalSeries out(s.order());
  for (std::size_t r = 0; r <= s.order(); ++r) {
    for (const auto& [w, c] : s.layer(r).terms()) {
      if (!w.is_normal_ordered())
        throw std::invalid_argument("word " + w.to_string() + " is not normal ordered");
      out.layers_[r].add_term(NormalMonomial::from_word(w), c);
    }
  }
  return out;
}

std::string NormalSeries::to_string(const NameTable& names) const {
  std::vector<std::vector<render::Term>> layers(layers_.size());
  for (std::size_t r = 0; r < layers_.size(); ++r)
    for (const auto& [m, c] : layers_[r].terms()) layers[r].push_back({c, m.to_string(names)});
  return render::layered(layers);
}

CommPoly project_classical(const EpsSeries& a) {
  CommPoly out;
  for (const auto& [w, c] : a.layer(0).terms()) out.add_term(NormalMonomial::from_word(w), c);
  return out;
}

CommPoly project_classical(const NormalSeries& a) { return a.layer(0); }

NormalSeries lift_normal(const CommPoly& f, std::size_t order) { return NormalSeries(f, order); }

}  // namespace ncq
