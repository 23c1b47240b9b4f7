#include <bit>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "edgeorbit/counting.hpp"
#include "edgeorbit/enumerate.hpp"

using namespace edgeorbit;

TEST_CASE("orbit count under the trivial group is the full power set") {
    RotationGroup trivial = close_edge_group({}, 6);
    CHECK(burnside_orbit_count(trivial, 6) == 64);
    auto orbits = brute_orbit_partition(trivial, 6);
    CHECK(orbits.size() == 64);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        CHECK(orbits[i].size() == 1);
        CHECK(orbits[i].front() == i);
    }
}

TEST_CASE("orbit counts for the built-ins") {
    CHECK(burnside_orbit_count(close_group(builtin_solid("tetrahedron")), 6) == 12);
    CHECK(burnside_orbit_count(close_group(builtin_solid("cube")), 12) == 218);
    CHECK(burnside_orbit_count(close_group(builtin_solid("octahedron")), 12) == 218);
    // by cycle index: (2^30 + 24*2^6 + 20*2^10 + 15*2^16) / 60 for both
    // 30-edge solids; order-5 elements give six 5-cycles, order-3 ten
    // 3-cycles, involutions two fixed edges plus fourteen swaps
    CHECK(burnside_orbit_count(close_group(builtin_solid("dodecahedron")), 30) == 17912448);
    CHECK(burnside_orbit_count(close_group(builtin_solid("icosahedron")), 30) == 17912448);
}

TEST_CASE("orbit count for the prism spec") {
    Solid prism = load_solid_file(PRISM_SPEC_PATH);
    RotationGroup group = close_group(prism);
    REQUIRE(group.order() == 6);
    CHECK(burnside_orbit_count(group, prism.edge_count()) == 104);
}

TEST_CASE("brute-force orbit partition") {
    for (const char* name : {"tetrahedron", "cube"}) {
        Solid solid = builtin_solid(name);
        RotationGroup group = close_group(solid);
        const int edges = solid.edge_count();
        auto orbits = brute_orbit_partition(group, edges);

        CHECK(orbits.size() == burnside_orbit_count(group, edges));

        std::vector<bool> seen(std::size_t{1} << edges, false);
        std::size_t mass = 0;
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            const auto& orbit = orbits[i];
            REQUIRE(!orbit.empty());
            // ascending inside, ordered by minima across
            CHECK(std::is_sorted(orbit.begin(), orbit.end()));
            if (i > 0) CHECK(orbits[i - 1].front() < orbit.front());
            CHECK(is_canonical(orbit.front(), group.tables));
            CHECK(group.order() % orbit.size() == 0);  // orbit-stabilizer
            for (EdgeMask m : orbit) {
                CHECK_FALSE(seen[m]);
                seen[m] = true;
            }
            mass += orbit.size();
            // closed under every group element
            std::set<EdgeMask> members(orbit.begin(), orbit.end());
            for (const EdgePermutation& g : group.elements)
                CHECK(members.count(apply_permutation(g, orbit.front())));
        }
        CHECK(mass == std::size_t{1} << edges);
    }
}

TEST_CASE("partition refuses oversized edge sets") {
    RotationGroup group = close_group(builtin_solid("dodecahedron"));
    CHECK_THROWS_AS(brute_orbit_partition(group, 30), std::invalid_argument);
}

TEST_CASE("orbit count validation") {
    RotationGroup empty;
    CHECK_THROWS(burnside_orbit_count(empty, 6));
    // a non-group multiset: fixed-point sum 8 + 4 + 2 = 14 is not divisible by 3
    RotationGroup bogus;
    bogus.elements.push_back(identity_permutation(3));
    bogus.elements.push_back(EdgePermutation{{1, 0, 2}});
    bogus.elements.push_back(EdgePermutation{{1, 2, 0}});
    CHECK_THROWS_AS(burnside_orbit_count(bogus, 3), std::runtime_error);
}

TEST_CASE("histograms of representative lists") {
    CHECK(histogram_of({}).empty());
    std::vector<EdgeMask> reps{0b111, 0b1011, 0b11};
    std::map<int, std::uint64_t> expected{{2, 1}, {3, 2}};
    CHECK(histogram_of(reps) == expected);

    Solid cube = builtin_solid("cube");
    RotationGroup group = close_group(cube);
    EnumerationResult res = sweep(cube, group, FilterConfig{}, 2);
    CHECK(histogram_of(res.representatives) == res.histogram);
}
