#include "ncq/algebra/free_poly.hpp"

#include <algorithm>
#include <vector>

#include "ncq/algebra/render.hpp"

namespace ncq {

FreePoly::FreePoly(GaussianRational scalar) {
  if (!scalar.is_zero()) terms_.emplace(Word{}, std::move(scalar));
}

FreePoly::FreePoly(const Word& w, GaussianRational coef) {
  if (!coef.is_zero()) terms_.emplace(w, std::move(coef));
}

GaussianRational FreePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void FreePoly::add_term(const Word& w, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Letter FreePoly::max_letter() const {
  Letter m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_letter());
  return m;
}

std::size_t FreePoly::degree() const {
  // Graded order puts the longest word first.
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

bool FreePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FreePoly FreePoly::operator-() const {
  FreePoly out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  FreePoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

FreePoly poly_mul(const FreePoly& a, const FreePoly& b) { return a * b; }

FreePoly FreePoly::left_mul(const Word& w) const {
  FreePoly out;
  for (const auto& [v, c] : terms_) out.terms_.emplace(w * v, c);
  return out;
}

FreePoly FreePoly::right_mul(const Word& w) const {
  FreePoly out;
  for (const auto& [v, c] : terms_) out.terms_.emplace(v * w, c);
  return out;
}

std::string FreePoly::to_string(const NameTable& names) const {
  std::vector<render::Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [w, c] : terms_) terms.push_back({c, w.to_string(names)});
  return render::sum(terms);
}

}  // namespace ncq
