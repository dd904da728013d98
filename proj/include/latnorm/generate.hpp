#pragma once

#include <random>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// Meet-closure, inside the Boolean lattice of subsets of {0, ..., k-1}, of
/// `draws` random subsets together with the full set. Always a lattice.
/// Elements are ordered by cardinality, then by bitmask; labels are the
/// bitmasks written as k binary digits, least significant digit last.
/// Requires 1 <= k <= 5.
Lattice random_meet_closed_lattice(std::mt19937_64& rng, unsigned k, std::size_t draws);

}  // namespace latnorm
