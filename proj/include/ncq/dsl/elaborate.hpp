#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncq/algebra/eps_series.hpp"
#include "ncq/dsl/ast.hpp"
#include "ncq/ordering/commutation_system.hpp"

namespace ncq::dsl {

inline constexpr std::size_t kDefaultOrder = 3;

struct ElaboratedSystem {
  CommutationSystem system;
  std::vector<EpsSeries> central;
};

// The override if given, else the file's order statement, else 3.
std::size_t effective_order(const SystemSpec& spec, std::optional<std::size_t> override_order = {});

// Builds the commutation system: defs inlined, params substituted, omitted
// pairs commuting, generator k = k-th declared name.
ElaboratedSystem elaborate(const SystemSpec& spec, std::optional<std::size_t> override_order = {});

// Evaluates an expression of the spec's language at the given order.
EpsSeries elaborate_expr(const SystemSpec& spec, const Expr& expr, std::size_t order);

}  // namespace ncq::dsl
