#include "ncq/algebra/gaussian_rational.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace ncq {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_fraction(long num, long den, long im_num,
                                                 long im_den) {
  if (den == 0 || im_den == 0) throw std::domain_error("zero denominator");
  mpq_class re(num, den);
  mpq_class im(im_num, im_den);
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

bool GaussianRational::is_negative_leading() const {
  if (sgn(re_) != 0) return sgn(re_) < 0;
  return sgn(im_) < 0;
}

namespace {

std::string imag_part(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_part(im_);
  std::string im = imag_part(im_);
  if (im.front() != '-') im = "+" + im;
  return "(" + re_.get_str() + im + ")";
}

std::size_t GaussianRational::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 31 + h(im_.get_str());
}

}  // namespace ncq
