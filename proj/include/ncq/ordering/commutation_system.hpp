#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncq/algebra/eps_series.hpp"

namespace ncq {

// Generators x1..xn with [x_i, x_j] = e * C_ij.  Only C_ij with i < j is
// stored; C_ji = -C_ij and C_ii = 0 are derived.  Index 1 is the lowest
// generator in the normal order.
class CommutationSystem {
 public:
  CommutationSystem(std::size_t n, std::size_t order, NameTable names = {});

  std::size_t size() const { return n_; }
  std::size_t order() const { return order_; }
  const NameTable& names() const { return names_; }
  std::string name(Letter k) const { return generator_name(names_, k); }

  // Sets C_ij; (j, i) is accepted and stored negated.  The value is
  // truncated (or rejected if shorter) to the system order.
  void set_commutator(Letter i, Letter j, const EpsSeries& c);

  // C_ij at the system order.
  EpsSeries c(Letter i, Letter j) const;
  // C_ij at a lower order.
  EpsSeries c(Letter i, Letter j, std::size_t order) const;

  // Whether every C_ij is a scalar series (no generator occurs).
  bool is_constant() const;

  // Same relations re-truncated to a new order.  Raising the order is only
  // exact when the original C_ij were specified to that order, which is the
  // caller's responsibility.
  CommutationSystem with_order(std::size_t order) const;

  const std::map<std::pair<Letter, Letter>, EpsSeries>& table() const { return table_; }

 private:
  void check_index(Letter k) const;

  std::size_t n_;
  std::size_t order_;
  NameTable names_;
  std::map<std::pair<Letter, Letter>, EpsSeries> table_;
};

}  // namespace ncq
