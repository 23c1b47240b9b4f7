#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "edgeorbit/solid.hpp"
#include "edgeorbit/symmetry.hpp"

namespace edgeorbit {

// All four on reproduces the standard ruleset: connected, non-planar,
// proper and non-empty subsets of the edge set.
struct FilterConfig {
    bool require_connected = true;
    bool require_nonplanar = true;
    bool exclude_empty = true;
    bool exclude_full = true;

    friend bool operator==(const FilterConfig&, const FilterConfig&) = default;
};

// "connected+nonplanar+proper+nonempty", or "none".
std::string describe(const FilterConfig& config);

struct EnumerationResult {
    std::string solid;
    FilterConfig filters;
    std::vector<EdgeMask> representatives;  // strictly ascending
    std::map<int, std::uint64_t> histogram;  // popcount -> count, nonzero rows
    std::uint64_t total = 0;
};

// A mask is the canonical representative of its orbit iff no group element
// maps it to a numerically smaller mask. Exits early on the first smaller
// image; tables[0] must be the identity and is skipped.
inline bool is_canonical(EdgeMask mask, std::span<const PermTable> tables) {
    for (size_t i = 1; i < tables.size(); ++i)
        if (tables[i].apply(mask) < mask) return false;
    return true;
}

// True iff the subgraph made of the selected edges and their endpoints has
// exactly one connected component. Vertices not touched by any selected
// edge are ignored. The mask must be non-empty.
bool is_connected(const Solid& solid, EdgeMask mask);

// True iff all endpoint vertices of the selected edges lie in one geometric
// plane (exact test on the solid's coordinates). The mask must be non-empty.
bool is_planar_subset(const Solid& solid, EdgeMask mask);

// Sweeps all 2^edge_count masks, splitting the range into one contiguous
// block per worker. Each mask runs the cheapest-rejection-first pipeline:
// empty/full exclusion, canonicity with early exit, connectivity, then
// non-planarity. Results merge in block order, so the output is ascending
// and identical for any worker count. With keep_representatives false only
// the total and histogram are accumulated.
EnumerationResult sweep(const Solid& solid, const RotationGroup& group,
                        const FilterConfig& config, int workers,
                        bool keep_representatives = true);

}  // namespace edgeorbit
