#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "edgeorbit/symmetry.hpp"

namespace edgeorbit {

// Number of orbits of ALL edge subsets (empty and full included) under the
// group action: the average over group elements of 2^cycles(g). The division
// is exact for a genuine group; a nonzero remainder throws.
std::uint64_t burnside_orbit_count(const RotationGroup& group, int edge_count);

// Partitions the full power set of edge subsets into orbits by applying
// every group element to every mask (reference per-bit application, not the
// compiled tables). Each orbit is ascending; orbits are ordered by their
// minima. Only for edge_count <= 16.
std::vector<std::vector<EdgeMask>> brute_orbit_partition(const RotationGroup& group,
                                                         int edge_count);

// Counts representatives by popcount.
std::map<int, std::uint64_t> histogram_of(std::span<const EdgeMask> representatives);

}  // namespace edgeorbit
