#pragma once

#include <random>
#include <vector>

#include "covlat/poset.hpp"

namespace covlat {

/// All posets on exactly n elements, one representative per isomorphism
/// class, in a deterministic order. Feasible for n <= 5.
std::vector<Poset> all_posets_up_to_iso(int n);

/// All bounded posets with 1..max_size elements up to isomorphism (a bounded
/// poset is its proper part plus forced bottom and top).
std::vector<Poset> all_bounded_posets_up_to_iso(int max_size);

/// Seeded random DAG on up to max_proper elements plus forced bounds.
Poset random_bounded_poset(std::mt19937_64& rng, int max_proper);

}  // namespace covlat
