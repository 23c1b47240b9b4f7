#include "edgeorbit/solid.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace edgeorbit {

namespace {

bool lex_less(const Point3& p, const Point3& q) {
    int s = sign(p.x - q.x);
    if (s != 0) return s < 0;
    s = sign(p.y - q.y);
    if (s != 0) return s < 0;
    return sign(p.z - q.z) < 0;
}

std::pair<int, int> sorted_pair(int v1, int v2) {
    return {std::min(v1, v2), std::max(v1, v2)};
}

// Search in a canonically sorted edge list; -1 when absent.
int find_edge(const std::vector<std::pair<int, int>>& edges, int v1, int v2) {
    const auto key = sorted_pair(v1, v2);
    const auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return static_cast<int>(it - edges.begin());
}

// A rotation as a 3x3 golden matrix with a common divisor (the icosahedral
// five-fold rotations have half-integer entries).
struct RotationSpec {
    GoldenNumber m[3][3];
    std::int64_t divisor = 1;
};

GoldenNumber exact_halve(GoldenNumber v, std::int64_t divisor) {
    if (divisor == 1) return v;
    if (v.a % divisor != 0 || v.b % divisor != 0)
        throw std::logic_error("rotation image is not a lattice point");
    return {v.a / divisor, v.b / divisor};
}

Point3 rotate(const RotationSpec& r, const Point3& p) {
    Point3 out;
    GoldenNumber* comps[3] = {&out.x, &out.y, &out.z};
    const GoldenNumber in[3] = {p.x, p.y, p.z};
    for (int row = 0; row < 3; ++row) {
        GoldenNumber acc;
        for (int col = 0; col < 3; ++col) acc = acc + r.m[row][col] * in[col];
        *comps[row] = exact_halve(acc, r.divisor);
    }
    return out;
}

VertexPermutation permutation_of(const std::vector<Point3>& vertices, const RotationSpec& r) {
    VertexPermutation perm;
    perm.image.reserve(vertices.size());
    for (const Point3& v : vertices) {
        const Point3 w = rotate(r, v);
        const auto it = std::find(vertices.begin(), vertices.end(), w);
        if (it == vertices.end())
            throw std::logic_error("rotation does not preserve the vertex set");
        perm.image.push_back(static_cast<int>(it - vertices.begin()));
    }
    return perm;
}

constexpr GoldenNumber kPhi{0, 1};      // phi
constexpr GoldenNumber kInvPhi{-1, 1};  // 1/phi = phi - 1

Point3 pt(std::int64_t x, std::int64_t y, std::int64_t z) {
    return {GoldenNumber{x, 0}, GoldenNumber{y, 0}, GoldenNumber{z, 0}};
}

GoldenNumber scale(GoldenNumber v, std::int64_t s) { return v * GoldenNumber{s, 0}; }

// All cyclic coordinate shifts of (0, s1*mid, s2*top) over both signs.
std::vector<Point3> cyclic_family(GoldenNumber mid, GoldenNumber top) {
    std::vector<Point3> out;
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
            const GoldenNumber c[3] = {GoldenNumber{0, 0}, scale(mid, s1), scale(top, s2)};
            for (int shift = 0; shift < 3; ++shift)
                out.push_back({c[shift % 3], c[(shift + 1) % 3], c[(shift + 2) % 3]});
        }
    return out;
}

std::vector<Point3> builtin_vertices(const std::string& name) {
    std::vector<Point3> v;
    if (name == "tetrahedron") {
        v = {pt(1, 1, 1), pt(1, -1, -1), pt(-1, 1, -1), pt(-1, -1, 1)};
    } else if (name == "cube" || name == "dodecahedron") {
        for (int x : {-1, 1})
            for (int y : {-1, 1})
                for (int z : {-1, 1}) v.push_back(pt(x, y, z));
        if (name == "dodecahedron") {
            const auto extra = cyclic_family(kInvPhi, kPhi);
            v.insert(v.end(), extra.begin(), extra.end());
        }
    } else if (name == "octahedron") {
        for (int s : {-1, 1}) {
            v.push_back(pt(s, 0, 0));
            v.push_back(pt(0, s, 0));
            v.push_back(pt(0, 0, s));
        }
    } else if (name == "icosahedron") {
        v = cyclic_family(GoldenNumber{1, 0}, kPhi);
    } else {
        throw std::invalid_argument("unknown solid: " + name);
    }
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

// Edges are the vertex pairs at minimal nonzero squared distance.
std::vector<std::pair<int, int>> derive_edges(const std::vector<Point3>& vertices) {
    const int n = static_cast<int>(vertices.size());
    bool have_min = false;
    GoldenNumber min_d2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Point3 d = vertices[j] - vertices[i];
            const GoldenNumber d2 = dot(d, d);
            if (d2.is_zero()) continue;
            if (!have_min || d2 < min_d2) {
                min_d2 = d2;
                have_min = true;
            }
        }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Point3 d = vertices[j] - vertices[i];
            if (dot(d, d) == min_d2) edges.emplace_back(i, j);
        }
    return edges;
}

// Two rotation generators per solid: one face rotation and one vertex or
// edge rotation, chosen so their closure is the full rotation group.
std::vector<RotationSpec> builtin_rotations(const std::string& name) {
    const GoldenNumber o{1, 0}, z{0, 0}, n1{-1, 0};
    // (x, y, z) -> (y, z, x): 120 degrees about the (1,1,1) axis.
    const RotationSpec cyclic{{{z, o, z}, {z, z, o}, {o, z, z}}, 1};
    if (name == "tetrahedron") {
        // 180 degrees about the z axis (an edge axis of this tetrahedron).
        const RotationSpec half_turn{{{n1, z, z}, {z, n1, z}, {z, z, o}}, 1};
        return {cyclic, half_turn};
    }
    if (name == "cube" || name == "octahedron") {
        // 90 degrees about the z axis.
        const RotationSpec quarter_turn{{{z, n1, z}, {o, z, z}, {z, z, o}}, 1};
        return {quarter_turn, cyclic};
    }
    if (name == "icosahedron") {
        // 72 degrees about the axis through vertex (0, 1, phi).
        const RotationSpec fifth{{{kInvPhi, -kPhi, o}, {kPhi, o, kInvPhi}, {n1, kInvPhi, kPhi}}, 2};
        return {fifth, cyclic};
    }
    if (name == "dodecahedron") {
        // 72 degrees about the axis through the face center along (1, 0, phi).
        const RotationSpec fifth{{{o, kPhi, kInvPhi}, {-kPhi, kInvPhi, o}, {kInvPhi, n1, kPhi}}, 2};
        return {fifth, cyclic};
    }
    throw std::invalid_argument("unknown solid: " + name);
}

}  // namespace

Solid make_solid(std::string name, std::vector<Point3> vertices,
                 std::vector<std::pair<int, int>> edges,
                 std::vector<VertexPermutation> generators) {
    const int n = static_cast<int>(vertices.size());
    if (n == 0) throw std::invalid_argument("solid has no vertices");
    if (edges.empty()) throw std::invalid_argument("solid has no edges");
    if (static_cast<int>(edges.size()) > kMaxEdges)
        throw std::invalid_argument("too many edges (limit is 30)");

    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("degenerate edge");
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
            throw std::invalid_argument("edge endpoint out of range");
        e = sorted_pair(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    for (const VertexPermutation& g : generators) {
        if (static_cast<int>(g.image.size()) != n)
            throw std::invalid_argument("generator length does not match vertex count");
        std::vector<bool> hit(n, false);
        for (int v : g.image) {
            if (v < 0 || v >= n || hit[v])
                throw std::invalid_argument("generator is not a bijection");
            hit[v] = true;
        }
        for (const auto& [v1, v2] : edges)
            if (find_edge(edges, g.image[v1], g.image[v2]) < 0)
                throw std::invalid_argument("generator does not map edges to edges");
    }

    return Solid{std::move(name), std::move(vertices), std::move(edges), std::move(generators)};
}

Solid builtin_solid(const std::string& name) {
    const std::vector<Point3> vertices = builtin_vertices(name);
    std::vector<std::pair<int, int>> edges = derive_edges(vertices);
    std::vector<VertexPermutation> generators;
    for (const RotationSpec& r : builtin_rotations(name))
        generators.push_back(permutation_of(vertices, r));
    return make_solid(name, vertices, std::move(edges), std::move(generators));
}

bool is_builtin_solid_name(const std::string& name) {
    return name == "tetrahedron" || name == "cube" || name == "octahedron" ||
           name == "dodecahedron" || name == "icosahedron";
}

int edge_index(const Solid& solid, int v1, int v2) {
    const int idx = find_edge(solid.edges, v1, v2);
    if (idx < 0) throw std::invalid_argument("vertex pair is not an edge");
    return idx;
}

namespace {

using nlohmann::json;

std::int64_t integer_field(const json& j) {
    if (!j.is_number_integer())
        throw std::invalid_argument("solid spec: expected an integer");
    return j.get<std::int64_t>();
}

GoldenNumber golden_field(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("solid spec: golden number must be a [a, b] pair");
    return {integer_field(j[0]), integer_field(j[1])};
}

}  // namespace

Solid load_solid(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("solid spec parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc.contains("vertices") ||
        !doc.contains("edges") || !doc.contains("generators"))
        throw std::invalid_argument("solid spec: need name, vertices, edges, generators");
    if (!doc["name"].is_string())
        throw std::invalid_argument("solid spec: name must be a string");

    std::vector<Point3> vertices;
    for (const json& jv : doc["vertices"]) {
        if (!jv.is_array() || jv.size() != 3)
            throw std::invalid_argument("solid spec: vertex must have 3 coordinates");
        vertices.push_back({golden_field(jv[0]), golden_field(jv[1]), golden_field(jv[2])});
    }

    std::vector<std::pair<int, int>> edges;
    for (const json& je : doc["edges"]) {
        if (!je.is_array() || je.size() != 2)
            throw std::invalid_argument("solid spec: edge must be a [v1, v2] pair");
        edges.emplace_back(static_cast<int>(integer_field(je[0])),
                           static_cast<int>(integer_field(je[1])));
    }

    std::vector<VertexPermutation> generators;
    for (const json& jg : doc["generators"]) {
        if (!jg.is_array())
            throw std::invalid_argument("solid spec: generator must be an array");
        VertexPermutation g;
        for (const json& jv : jg) g.image.push_back(static_cast<int>(integer_field(jv)));
        generators.push_back(std::move(g));
    }

    return make_solid(doc["name"].get<std::string>(), std::move(vertices),
                      std::move(edges), std::move(generators));
}

Solid load_solid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read solid spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_solid(buf.str());
}

std::string solid_to_json(const Solid& solid) {
    using ordered = nlohmann::ordered_json;
    ordered doc;
    doc["name"] = solid.name;
    auto& jv = doc["vertices"] = ordered::array();
    for (const Point3& p : solid.vertices)
        jv.push_back({{p.x.a, p.x.b}, {p.y.a, p.y.b}, {p.z.a, p.z.b}});
    auto& je = doc["edges"] = ordered::array();
    for (const auto& [lo, hi] : solid.edges) je.push_back({lo, hi});
    auto& jg = doc["generators"] = ordered::array();
    for (const VertexPermutation& g : solid.generators) jg.push_back(g.image);
    return doc.dump(2) + "\n";
}

}  // namespace edgeorbit
