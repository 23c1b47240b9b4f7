#include "edgeorbit/counting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace edgeorbit {

std::uint64_t burnside_orbit_count(const RotationGroup& group, int edge_count) {
    if (group.order() == 0) throw std::invalid_argument("empty group");
    std::uint64_t sum = 0;
    for (const EdgePermutation& g : group.elements) {
        if (g.size() != edge_count)
            throw std::invalid_argument("group does not act on this many edges");
        sum += std::uint64_t{1} << cycle_count(g);
    }
    if (sum % group.order() != 0)
        throw std::runtime_error("fixed-point sum not divisible by group order; corrupted group");
    return sum / group.order();
}

std::vector<std::vector<EdgeMask>> brute_orbit_partition(const RotationGroup& group,
                                                         int edge_count) {
    if (edge_count > 16)
        throw std::invalid_argument("brute orbit partition is limited to 16 edges");
    const std::uint32_t mask_count = std::uint32_t{1} << edge_count;
    std::vector<bool> visited(mask_count, false);
    std::vector<std::vector<EdgeMask>> orbits;
    std::vector<EdgeMask> orbit;
    for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
        if (visited[mask]) continue;
        orbit.clear();
        for (const EdgePermutation& g : group.elements) {
            const EdgeMask image = apply_permutation(g, mask);
            if (!visited[image]) {
                visited[image] = true;
                orbit.push_back(image);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(orbit);
    }
    return orbits;
}

std::map<int, std::uint64_t> histogram_of(std::span<const EdgeMask> representatives) {
    std::map<int, std::uint64_t> histogram;
    for (EdgeMask mask : representatives) histogram[std::popcount(mask)] += 1;
    return histogram;
}

}  // namespace edgeorbit
