#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "edgeorbit/solid.hpp"
#include "edgeorbit/symmetry.hpp"

using namespace edgeorbit;

namespace {

const char* kBuiltins[] = {"tetrahedron", "cube", "octahedron", "dodecahedron",
                           "icosahedron"};

bool lex_less(const Point3& p, const Point3& q) {
    if (sign(p.x - q.x) != 0) return p.x < q.x;
    if (sign(p.y - q.y) != 0) return p.y < q.y;
    return p.z < q.z;
}

GoldenNumber squared_distance(const Point3& p, const Point3& q) {
    Point3 d = p - q;
    return dot(d, d);
}

std::string prism_path() { return PRISM_SPEC_PATH; }

}  // namespace

TEST_CASE("built-in vertex and edge counts") {
    struct Row { const char* name; int v, e; };
    const Row rows[] = {
        {"tetrahedron", 4, 6},   {"cube", 8, 12},        {"octahedron", 6, 12},
        {"dodecahedron", 20, 30}, {"icosahedron", 12, 30},
    };
    for (const Row& r : rows) {
        Solid s = builtin_solid(r.name);
        CHECK(s.name == r.name);
        CHECK(s.vertex_count() == r.v);
        CHECK(s.edge_count() == r.e);
        CHECK(s.generators.size() == 2);
    }
    CHECK(is_builtin_solid_name("cube"));
    CHECK_FALSE(is_builtin_solid_name("hypercube"));
    CHECK_THROWS_AS(builtin_solid("hypercube"), std::invalid_argument);
}

TEST_CASE("built-in vertices are strictly sorted, edges canonical") {
    for (const char* name : kBuiltins) {
        Solid s = builtin_solid(name);
        for (int i = 0; i + 1 < s.vertex_count(); ++i)
            CHECK(lex_less(s.vertices[i], s.vertices[i + 1]));
        for (int i = 0; i < s.edge_count(); ++i) {
            CHECK(s.edges[i].first < s.edges[i].second);
            CHECK(s.edges[i].second < s.vertex_count());
            CHECK(s.edges[i].first >= 0);
            if (i > 0) CHECK(s.edges[i - 1] < s.edges[i]);
        }
    }
}

TEST_CASE("edges are exactly the minimal-distance pairs") {
    for (const char* name : kBuiltins) {
        Solid s = builtin_solid(name);
        GoldenNumber edge_len = squared_distance(s.vertices[s.edges[0].first],
                                                 s.vertices[s.edges[0].second]);
        std::set<std::pair<int, int>> edge_set(s.edges.begin(), s.edges.end());
        for (int i = 0; i < s.vertex_count(); ++i) {
            for (int j = i + 1; j < s.vertex_count(); ++j) {
                GoldenNumber d2 = squared_distance(s.vertices[i], s.vertices[j]);
                CHECK(sign(d2) > 0);  // no duplicate vertices
                if (edge_set.count({i, j}))
                    CHECK(d2 == edge_len);
                else
                    CHECK(edge_len < d2);
            }
        }
    }
}

TEST_CASE("no three vertices of any built-in are collinear") {
    for (const char* name : kBuiltins) {
        Solid s = builtin_solid(name);
        const int n = s.vertex_count();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    Point3 u = s.vertices[j] - s.vertices[i];
                    Point3 v = s.vertices[k] - s.vertices[i];
                    CHECK_FALSE(cross(u, v) == (Point3{}));
                }
    }
}

TEST_CASE("generators act transitively on vertices") {
    for (const char* name : kBuiltins) {
        Solid s = builtin_solid(name);
        std::vector<bool> seen(s.vertex_count(), false);
        std::vector<int> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (const VertexPermutation& g : s.generators) {
                int w = g.image[v];
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        for (bool b : seen) CHECK(b);
    }
}

TEST_CASE("generators induce edge permutations") {
    for (const char* name : kBuiltins) {
        Solid s = builtin_solid(name);
        for (const VertexPermutation& g : s.generators) {
            EdgePermutation p = vertex_to_edge(s, g);
            CHECK(p.size() == s.edge_count());
            std::set<std::uint8_t> image(p.image.begin(), p.image.end());
            CHECK(static_cast<int>(image.size()) == s.edge_count());
        }
    }
}

TEST_CASE("edge_index") {
    Solid cube = builtin_solid("cube");
    for (int e = 0; e < cube.edge_count(); ++e) {
        auto [lo, hi] = cube.edges[e];
        CHECK(edge_index(cube, lo, hi) == e);
        CHECK(edge_index(cube, hi, lo) == e);
    }
    CHECK_THROWS_AS(edge_index(cube, 0, 7), std::invalid_argument);  // body diagonal
    CHECK_THROWS_AS(edge_index(cube, 3, 3), std::invalid_argument);
}

TEST_CASE("JSON round trip preserves every field") {
    for (const char* name : kBuiltins) {
        Solid s = builtin_solid(name);
        Solid t = load_solid(solid_to_json(s));
        CHECK(t.name == s.name);
        CHECK(t.vertices == s.vertices);
        CHECK(t.edges == s.edges);
        CHECK(t.generators == s.generators);
    }
}

TEST_CASE("triangular prism spec file") {
    Solid prism = load_solid_file(prism_path());
    CHECK(prism.name == "triangular-prism");
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
    RotationGroup group = close_group(prism);
    CHECK(group.order() == 6);
}

TEST_CASE("make_solid validation") {
    auto pt = [](std::int64_t x, std::int64_t y, std::int64_t z) {
        return Point3{{x, 0}, {y, 0}, {z, 0}};
    };
    std::vector<Point3> tri{pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0)};
    VertexPermutation rot{{1, 2, 0}};

    SUBCASE("valid triangle") {
        Solid s = make_solid("tri", tri, {{1, 0}, {1, 2}, {0, 2}}, {rot});
        CHECK(s.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    }
    SUBCASE("no vertices") {
        CHECK_THROWS_AS(make_solid("x", {}, {}, {}), std::invalid_argument);
    }
    SUBCASE("degenerate edge") {
        CHECK_THROWS_AS(make_solid("x", tri, {{1, 1}}, {}), std::invalid_argument);
    }
    SUBCASE("edge endpoint out of range") {
        CHECK_THROWS_AS(make_solid("x", tri, {{0, 3}}, {}), std::invalid_argument);
        CHECK_THROWS_AS(make_solid("x", tri, {{-1, 1}}, {}), std::invalid_argument);
    }
    SUBCASE("duplicate edge in either orientation") {
        CHECK_THROWS_AS(make_solid("x", tri, {{0, 1}, {1, 0}}, {}), std::invalid_argument);
    }
    SUBCASE("generator wrong length") {
        CHECK_THROWS_AS(make_solid("x", tri, {{0, 1}}, {VertexPermutation{{1, 0}}}),
                        std::invalid_argument);
    }
    SUBCASE("generator not a bijection") {
        CHECK_THROWS_AS(make_solid("x", tri, {{0, 1}}, {VertexPermutation{{0, 0, 1}}}),
                        std::invalid_argument);
    }
    SUBCASE("generator drops an edge") {
        // the rotation maps {0,1} to {1,2}, which is not in the edge list
        CHECK_THROWS_AS(make_solid("x", tri, {{0, 1}}, {rot}), std::invalid_argument);
    }
    SUBCASE("too many edges") {
        // complete graph on 9 vertices has 36 > 30 edges
        std::vector<Point3> many;
        for (int i = 0; i < 9; ++i) many.push_back(pt(i, i * i, i * i * i));
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j) all.push_back({i, j});
        CHECK_THROWS_WITH_AS(make_solid("x", many, all, {}),
                             doctest::Contains("too many edges"), std::invalid_argument);
    }
}

TEST_CASE("solid spec parsing errors") {
    CHECK_THROWS(load_solid("not json at all"));
    CHECK_THROWS(load_solid("{}"));
    CHECK_THROWS_AS(load_solid(R"({"name":"x","vertices":[[[0.5,0],[0,0],[0,0]]],)"
                               R"("edges":[],"generators":[]})"),
                    std::invalid_argument);  // non-integer coordinate
    CHECK_THROWS(load_solid_file("/no/such/file.json"));
}
