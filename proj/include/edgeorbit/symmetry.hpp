#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgeorbit/solid.hpp"

namespace edgeorbit {

// A subset of edges, bit e set iff edge e is in the subset. Every solid has
// at most 30 edges, so one 32-bit word covers all of them.
using EdgeMask = std::uint32_t;

// A symmetry's action on edge indices: image[e] is where edge e goes.
struct EdgePermutation {
    std::vector<std::uint8_t> image;

    int size() const { return static_cast<int>(image.size()); }

    friend bool operator==(const EdgePermutation&, const EdgePermutation&) = default;
};

EdgePermutation identity_permutation(int n);

// Composition convention: compose(g, h) maps e to g[h[e]].
EdgePermutation compose(const EdgePermutation& g, const EdgePermutation& h);

EdgePermutation inverse(const EdgePermutation& g);

// Number of cycles, fixed points included.
int cycle_count(const EdgePermutation& g);

// Disjoint-cycle notation with fixed points omitted, "()" for the identity.
std::string cycle_notation(const EdgePermutation& g);

// Reference (per-bit) application of a permutation to a subset.
EdgeMask apply_permutation(const EdgePermutation& g, EdgeMask mask);

// The edge action induced by a vertex symmetry: edge (v1, v2) goes to the
// edge with endpoints {g(v1), g(v2)}. Throws if some image pair is not an
// edge of the solid.
EdgePermutation vertex_to_edge(const Solid& solid, const VertexPermutation& g);

// A permutation compiled into chunked lookup tables: edge indices are split
// into runs of 8 bits, and entry[r][i] is the 32-bit word of destination
// bits for the bits of i within run r. Applying the permutation to a mask
// is then the OR of one table entry per run. Unused runs stay all-zero, so
// apply() can read all four unconditionally.
struct PermTable {
    std::uint32_t entry[4][256] = {};
    int runs = 0;
    int edge_count = 0;

    int run_width(int r) const {
        const int w = edge_count - 8 * r;
        return w >= 8 ? 8 : w;
    }

    std::uint32_t apply(std::uint32_t mask) const {
        return entry[0][mask & 0xff] | entry[1][(mask >> 8) & 0xff] |
               entry[2][(mask >> 16) & 0xff] | entry[3][(mask >> 24) & 0xff];
    }
};

PermTable compile_table(const EdgePermutation& g, int edge_count);

inline EdgeMask apply(const PermTable& table, EdgeMask mask) { return table.apply(mask); }

// A rotation group acting on edge indices. Element 0 is the identity;
// tables[i] is elements[i] in compiled form.
struct RotationGroup {
    std::vector<EdgePermutation> elements;
    std::vector<PermTable> tables;

    int order() const { return static_cast<int>(elements.size()); }
};

// Closure of a set of edge permutations under composition (breadth-first
// products, deduplicated by image array). Throws if the closure exceeds the
// safety bound of 1000 elements.
RotationGroup close_edge_group(const std::vector<EdgePermutation>& generators, int edge_count);

// Translates the solid's vertex generators to edge permutations and closes.
RotationGroup close_group(const Solid& solid);

}  // namespace edgeorbit
