#pragma once

#include <map>
#include <string>

#include "ncq/algebra/gaussian_rational.hpp"
#include "ncq/algebra/word.hpp"

namespace ncq {

// Finite linear combination of words with Gaussian-rational coefficients.
// Zero coefficients are never stored, so structural equality is
// mathematical equality.  Iteration follows the graded-lex order of Word.
class FreePoly {
 public:
  using Terms = std::map<Word, GaussianRational>;

  FreePoly() = default;
  FreePoly(GaussianRational scalar);  // NOLINT(implicit)
  FreePoly(const Word& w, GaussianRational coef = 1);

  static FreePoly generator(Letter k) { return FreePoly(Word{k}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  GaussianRational coefficient(const Word& w) const;

  void add_term(const Word& w, const GaussianRational& c);

  // Highest generator index occurring, 0 for constants.
  Letter max_letter() const;
  // Maximal word length; 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_constant() const;

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const GaussianRational& c);

  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(FreePoly a, const GaussianRational& c) { return a *= c; }
  friend FreePoly operator*(const GaussianRational& c, FreePoly a) { return a *= c; }
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  FreePoly operator-() const;

  friend bool operator==(const FreePoly&, const FreePoly&) = default;

  // Left/right multiplication by a single word.
  FreePoly left_mul(const Word& w) const;
  FreePoly right_mul(const Word& w) const;

  std::string to_string(const NameTable& names = {}) const;

 private:
  Terms terms_;
};

FreePoly poly_mul(const FreePoly& a, const FreePoly& b);

}  // namespace ncq
