#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgeorbit/golden.hpp"

namespace edgeorbit {

// A vertex symmetry in image form: image[v] is where vertex v goes.
struct VertexPermutation {
    std::vector<int> image;

    friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
};

// A labeled wireframe: exact vertex coordinates, a canonically ordered edge
// list, and rotation generators given as vertex permutations.
//
// Edge list invariants: every pair is (lo, hi) with lo < hi, the list is
// sorted lexicographically, and the position in the list is the edge index
// used by the bitmask representation. At most 30 edges.
struct Solid {
    std::string name;
    std::vector<Point3> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexPermutation> generators;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

inline constexpr int kMaxEdges = 30;

// Validates all Solid invariants and canonicalizes the edge list (sorts each
// pair, then the whole list). Throws std::invalid_argument on violations:
// out-of-range or degenerate edges, duplicate edges, more than 30 edges,
// non-bijective generators, generators that do not map edges to edges.
Solid make_solid(std::string name, std::vector<Point3> vertices,
                 std::vector<std::pair<int, int>> edges,
                 std::vector<VertexPermutation> generators);

// One of: tetrahedron, cube, octahedron, dodecahedron, icosahedron.
// Vertices are sorted lexicographically by (x, y, z) under the exact golden
// order, edges are the vertex pairs at minimal nonzero distance, and the two
// generators close to the full rotation group (order 12, 24, 24, 60, 60).
Solid builtin_solid(const std::string& name);

bool is_builtin_solid_name(const std::string& name);

// Parses a solid-spec JSON document:
//   { "name": "...",
//     "vertices": [[[a,b],[a,b],[a,b]], ...],   // golden numbers a + b*phi
//     "edges": [[v1,v2], ...],
//     "generators": [[...], ...] }              // vertex images
// Integers only; edges may come in any order and are canonicalized.
Solid load_solid(const std::string& json_text);

Solid load_solid_file(const std::string& path);

// Inverse of load_solid for round-tripping solids through the file format.
std::string solid_to_json(const Solid& solid);

// Position of {v1, v2} in the canonical edge list, accepting the endpoints
// in either order. Throws std::invalid_argument if the pair is not an edge.
int edge_index(const Solid& solid, int v1, int v2);

}  // namespace edgeorbit
