#include "ncq/algebra/render.hpp"

namespace ncq::render {

namespace {

std::string unsigned_term(const GaussianRational& magnitude, const std::string& eps,
                          const std::string& monomial) {
  std::string out;
  auto append = [&out](const std::string& f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  if (!magnitude.is_one()) append(magnitude.to_string());
  if (!eps.empty()) append(eps);
  if (monomial != "1") append(monomial);
  return out.empty() ? "1" : out;
}

void join(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

void append_terms(std::string& out, const std::vector<Term>& terms, const std::string& eps) {
  for (const auto& t : terms) {
    bool neg = t.coef.is_negative_leading();
    join(out, neg, unsigned_term(neg ? -t.coef : t.coef, eps, t.monomial));
  }
}

}  // namespace

std::string eps_power(std::size_t r) {
  if (r == 0) return "";
  if (r == 1) return "e";
  return "e^" + std::to_string(r);
}

std::string sum(const std::vector<Term>& terms) {
  std::string out;
  append_terms(out, terms, "");
  return out.empty() ? "0" : out;
}

std::string layered(const std::vector<std::vector<Term>>& layers) {
  std::string out;
  for (std::size_t r = 0; r < layers.size(); ++r) {
    const auto& terms = layers[r];
    if (terms.empty()) continue;
    if (r == 0 || terms.size() == 1) {
      append_terms(out, terms, eps_power(r));
    } else {
      join(out, false, eps_power(r) + "*(" + sum(terms) + ")");
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace ncq::render
