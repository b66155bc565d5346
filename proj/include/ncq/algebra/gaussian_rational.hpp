#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace ncq {

// Exact complex number a + b*i with a, b rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value), im_(0) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }
  static GaussianRational from_fraction(long num, long den, long im_num = 0,
                                        long im_den = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // Throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // True when the first nonzero component is negative; used by printers to
  // pull a leading minus sign out of a term.
  bool is_negative_leading() const;

  // Canonical text: "3", "-1/2", "i", "-2*i", "(1+2*i)", "(-1/3-i)".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace ncq
