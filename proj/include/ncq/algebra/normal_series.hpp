#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncq/algebra/eps_series.hpp"

namespace ncq {

// Exponent vector (r1, ..., rn) standing for x1^r1 x2^r2 ... xn^rn.
// Stored without trailing zeros so that equality does not depend on n.
class NormalMonomial {
 public:
  NormalMonomial() = default;
  explicit NormalMonomial(std::vector<std::uint32_t> exponents);

  static NormalMonomial from_word(const Word& w);  // abelianizes
  static NormalMonomial generator(Letter k);

  std::uint32_t exponent(Letter k) const;
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint32_t degree() const;
  bool is_unit() const { return exps_.empty(); }

  Word to_word() const;  // sorted word

  friend NormalMonomial operator*(const NormalMonomial& a, const NormalMonomial& b);
  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
  // Same order as the embedded sorted words (graded-lex).
  friend std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b);

  std::string to_string(const NameTable& names = {}) const { return to_word().to_string(names); }

 private:
  void trim();
  std::vector<std::uint32_t> exps_;
};

// Commutative polynomial over NormalMonomial.
class CommPoly {
 public:
  using Terms = std::map<NormalMonomial, GaussianRational>;

  CommPoly() = default;
  CommPoly(GaussianRational scalar);  // NOLINT(implicit)
  CommPoly(const NormalMonomial& m, GaussianRational coef = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const NormalMonomial& m) const;
  void add_term(const NormalMonomial& m, const GaussianRational& c);

  // Whether every term has total degree d.
  bool is_homogeneous(std::uint32_t d) const;

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const GaussianRational& c);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(CommPoly a, const GaussianRational& c) { return a *= c; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  CommPoly operator-() const { return CommPoly(*this) *= GaussianRational(-1); }
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

  // Embedding into the free algebra: each monomial becomes its sorted word.
  FreePoly embed() const;

  std::string to_string(const NameTable& names = {}) const;

 private:
  Terms terms_;
};

// Element of the normal-ordered subspace, truncated at e^{N+1}.
class NormalSeries {
 public:
  explicit NormalSeries(std::size_t order = 0) : layers_(order + 1) {}
  NormalSeries(CommPoly layer0, std::size_t order);

  std::size_t order() const { return layers_.size() - 1; }
  const CommPoly& layer(std::size_t r) const { return layers_.at(r); }
  CommPoly& layer(std::size_t r) { return layers_.at(r); }
  const std::vector<CommPoly>& layers() const { return layers_; }
  bool is_zero() const;

  NormalSeries truncated(std::size_t order) const;
  NormalSeries shifted(std::size_t k) const;

  NormalSeries& operator+=(const NormalSeries& o);
  NormalSeries& operator-=(const NormalSeries& o);
  NormalSeries& operator*=(const GaussianRational& c);
  friend NormalSeries operator+(NormalSeries a, const NormalSeries& b) { return a += b; }
  friend NormalSeries operator-(NormalSeries a, const NormalSeries& b) { return a -= b; }
  friend NormalSeries operator*(NormalSeries a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const NormalSeries&, const NormalSeries&) = default;

  // Adds c * e^shift * value, dropping layers past the order.
  void add_shifted(const NormalSeries& value, std::size_t shift, const GaussianRational& c);

  EpsSeries embed() const;
  // Inverse of embed.  Throws std::invalid_argument if a layer holds a word
  // that is not normal ordered.
  static NormalSeries from_normal_ordered(const EpsSeries& s);

  std::string to_string(const NameTable& names = {}) const;

 private:
  std::vector<CommPoly> layers_;
};

// Sets e = 0 and abelianizes.
CommPoly project_classical(const EpsSeries& a);
CommPoly project_classical(const NormalSeries& a);

// Places a commutative polynomial in layer 0 as its normal-ordered lift.
NormalSeries lift_normal(const CommPoly& f, std::size_t order);

}  // namespace ncq
