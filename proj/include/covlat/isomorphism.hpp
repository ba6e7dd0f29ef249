#pragma once

#include <optional>
#include <vector>

#include "covlat/poset.hpp"

namespace covlat {

inline constexpr long long kDefaultIsoBudget = 10'000'000;

/// Order-isomorphism a -> b, or nullopt if none exists. Candidates are pruned
/// by iterated invariant refinement over the Hasse diagram before
/// backtracking; when the number of candidate trials exceeds `budget` a
/// budget_error is thrown rather than hanging.
std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b,
                                                 long long budget = kDefaultIsoBudget);

bool is_isomorphic(const Poset& a, const Poset& b, long long budget = kDefaultIsoBudget);

}  // namespace covlat
