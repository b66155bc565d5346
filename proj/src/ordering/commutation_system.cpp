#include "ncq/ordering/commutation_system.hpp"

#include <stdexcept>
#include <utility>

namespace ncq {

namespace {

EpsSeries resized(const EpsSeries& s, std::size_t order) {
  if (s.order() >= order) return s.truncated(order);
  EpsSeries out(order);
  for (std::size_t r = 0; r <= s.order(); ++r) out.layer(r) = s.layer(r);
  return out;
}

}  // namespace

CommutationSystem::CommutationSystem(std::size_t n, std::size_t order, NameTable names)
    : n_(n), order_(order), names_(std::move(names)) {
  if (n == 0) throw std::invalid_argument("a commutation system needs at least one generator");
  if (!names_.empty() && names_.size() != n)
    throw std::invalid_argument("generator name count does not match generator count");
}

void CommutationSystem::check_index(Letter k) const {
  if (k < 1 || k > n_)
    throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." +
                            std::to_string(n_));
}

void CommutationSystem::set_commutator(Letter i, Letter j, const EpsSeries& c) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("C_ii is identically zero");
  if (c.max_letter() > n_)
    throw std::out_of_range("commutator value uses generator outside 1.." + std::to_string(n_));
  if (c.order() < order_) throw IncompatibleOrder(c.order(), order_);
  EpsSeries v = c.truncated(order_);
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  if (v.is_zero())
    table_.erase({i, j});
  else
    table_.insert_or_assign({i, j}, std::move(v));
}

EpsSeries CommutationSystem::c(Letter i, Letter j) const { return c(i, j, order_); }

EpsSeries CommutationSystem::c(Letter i, Letter j, std::size_t order) const {
  check_index(i);
  check_index(j);
  if (order > order_) throw IncompatibleOrder(order_, order);
  if (i == j) return EpsSeries(order);
  bool flip = i > j;
  auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == table_.end()) return EpsSeries(order);
  EpsSeries v = it->second.truncated(order);
  return flip ? -v : v;
}

bool CommutationSystem::is_constant() const {
  for (const auto& [key, v] : table_)
    if (!v.is_constant()) return false;
  return true;
}

CommutationSystem CommutationSystem::with_order(std::size_t order) const {
  CommutationSystem out(n_, order, names_);
  for (const auto& [key, v] : table_) out.table_.emplace(key, resized(v, order));
  return out;
}

}  // namespace ncq
