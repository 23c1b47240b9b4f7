#include "edgeorbit/symmetry.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgeorbit {

namespace {

constexpr int kClosureBound = 1000;

void check_bijection(const EdgePermutation& g, int edge_count) {
    if (g.size() != edge_count)
        throw std::invalid_argument("permutation length does not match edge count");
    std::uint32_t hit = 0;
    for (std::uint8_t e : g.image) {
        if (e >= edge_count || (hit & (1u << e)))
            throw std::invalid_argument("permutation is not a bijection");
        hit |= 1u << e;
    }
}

}  // namespace

EdgePermutation identity_permutation(int n) {
    EdgePermutation id;
    id.image.resize(n);
    for (int e = 0; e < n; ++e) id.image[e] = static_cast<std::uint8_t>(e);
    return id;
}

EdgePermutation compose(const EdgePermutation& g, const EdgePermutation& h) {
    EdgePermutation out;
    out.image.resize(h.image.size());
    for (size_t e = 0; e < h.image.size(); ++e) out.image[e] = g.image[h.image[e]];
    return out;
}

EdgePermutation inverse(const EdgePermutation& g) {
    EdgePermutation out;
    out.image.resize(g.image.size());
    for (size_t e = 0; e < g.image.size(); ++e) out.image[g.image[e]] = static_cast<std::uint8_t>(e);
    return out;
}

int cycle_count(const EdgePermutation& g) {
    const int n = g.size();
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (int e = start; !seen[e]; e = g.image[e]) seen[e] = true;
    }
    return cycles;
}

std::string cycle_notation(const EdgePermutation& g) {
    const int n = g.size();
    std::vector<bool> seen(n, false);
    std::ostringstream out;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || g.image[start] == start) {
            seen[start] = true;
            continue;
        }
        out << '(';
        bool first = true;
        for (int e = start; !seen[e]; e = g.image[e]) {
            seen[e] = true;
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

EdgeMask apply_permutation(const EdgePermutation& g, EdgeMask mask) {
    EdgeMask out = 0;
    for (EdgeMask m = mask; m != 0; m &= m - 1)
        out |= EdgeMask{1} << g.image[std::countr_zero(m)];
    return out;
}

EdgePermutation vertex_to_edge(const Solid& solid, const VertexPermutation& g) {
    EdgePermutation out;
    out.image.reserve(solid.edges.size());
    for (const auto& [v1, v2] : solid.edges)
        out.image.push_back(static_cast<std::uint8_t>(
            edge_index(solid, g.image[v1], g.image[v2])));
    return out;
}

PermTable compile_table(const EdgePermutation& g, int edge_count) {
    check_bijection(g, edge_count);
    if (edge_count > kMaxEdges) throw std::invalid_argument("too many edges (limit is 30)");
    PermTable table;
    table.edge_count = edge_count;
    table.runs = (edge_count + 7) / 8;
    for (int r = 0; r < table.runs; ++r) {
        const int width = table.run_width(r);
        for (int i = 1; i < (1 << width); ++i) {
            const int low = std::countr_zero(static_cast<unsigned>(i));
            table.entry[r][i] =
                table.entry[r][i & (i - 1)] | (std::uint32_t{1} << g.image[8 * r + low]);
        }
    }
    return table;
}

RotationGroup close_edge_group(const std::vector<EdgePermutation>& generators, int edge_count) {
    for (const EdgePermutation& g : generators) check_bijection(g, edge_count);

    RotationGroup group;
    group.elements.push_back(identity_permutation(edge_count));
    std::set<std::vector<std::uint8_t>> seen{group.elements[0].image};
    for (size_t i = 0; i < group.elements.size(); ++i) {
        for (const EdgePermutation& g : generators) {
            EdgePermutation next = compose(g, group.elements[i]);
            if (!seen.insert(next.image).second) continue;
            if (static_cast<int>(group.elements.size()) >= kClosureBound)
                throw std::runtime_error("group closure exceeds 1000 elements");
            group.elements.push_back(std::move(next));
        }
    }

    group.tables.reserve(group.elements.size());
    for (const EdgePermutation& g : group.elements)
        group.tables.push_back(compile_table(g, edge_count));
    return group;
}

RotationGroup close_group(const Solid& solid) {
    std::vector<EdgePermutation> edge_gens;
    edge_gens.reserve(solid.generators.size());
    for (const VertexPermutation& g : solid.generators)
        edge_gens.push_back(vertex_to_edge(solid, g));
    return close_edge_group(edge_gens, solid.edge_count());
}

}  // namespace edgeorbit
