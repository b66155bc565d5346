#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncq/algebra/free_poly.hpp"

namespace ncq {

// Raised when two values truncated at different orders meet.
class IncompatibleOrder : public std::invalid_argument {
 public:
  IncompatibleOrder(std::size_t a, std::size_t b);
};

// sum_{r=0}^{N} e^r * layer[r], exact modulo e^{N+1}.
class EpsSeries {
 public:
  explicit EpsSeries(std::size_t order = 0) : layers_(order + 1) {}
  EpsSeries(FreePoly layer0, std::size_t order);

  static EpsSeries epsilon(std::size_t order);
  static EpsSeries generator(Letter k, std::size_t order) {
    return EpsSeries(FreePoly::generator(k), order);
  }

  std::size_t order() const { return layers_.size() - 1; }
  const FreePoly& layer(std::size_t r) const { return layers_.at(r); }
  FreePoly& layer(std::size_t r) { return layers_.at(r); }
  const std::vector<FreePoly>& layers() const { return layers_; }

  bool is_zero() const;
  Letter max_letter() const;
  // True when no layer contains a word of positive length.
  bool is_constant() const;

  // Same value viewed at a lower (or equal) order.
  EpsSeries truncated(std::size_t order) const;
  // Multiply by e^k, dropping layers past the order.
  EpsSeries shifted(std::size_t k) const;

  EpsSeries& operator+=(const EpsSeries& o);
  EpsSeries& operator-=(const EpsSeries& o);
  EpsSeries& operator*=(const GaussianRational& c);

  friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
  friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
  friend EpsSeries operator*(EpsSeries a, const GaussianRational& c) { return a *= c; }
  friend EpsSeries operator*(const GaussianRational& c, EpsSeries a) { return a *= c; }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
  EpsSeries operator-() const;

  friend bool operator==(const EpsSeries&, const EpsSeries&) = default;

  EpsSeries left_mul(const Word& w) const;
  EpsSeries right_mul(const Word& w) const;

  std::string to_string(const NameTable& names = {}) const;

 private:
  std::vector<FreePoly> layers_;
};

EpsSeries series_mul(const EpsSeries& a, const EpsSeries& b);
EpsSeries commutator(const EpsSeries& a, const EpsSeries& b);

}  // namespace ncq
