#include "edgeorbit/enumerate.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace edgeorbit {

std::string describe(const FilterConfig& config) {
    std::string out;
    auto add = [&out](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += '+';
        out += name;
    };
    add(config.require_connected, "connected");
    add(config.require_nonplanar, "nonplanar");
    add(config.exclude_full, "proper");
    add(config.exclude_empty, "nonempty");
    return out.empty() ? "none" : out;
}

namespace {

// Endpoints of the selected edges, deduplicated. At most 60 slots since a
// mask selects at most 30 edges.
int collect_endpoints(const Solid& solid, EdgeMask mask, int out[60]) {
    int n = 0;
    for (EdgeMask m = mask; m != 0; m &= m - 1) {
        const auto& [a, b] = solid.edges[std::countr_zero(m)];
        for (int v : {a, b}) {
            bool known = false;
            for (int i = 0; i < n; ++i)
                if (out[i] == v) {
                    known = true;
                    break;
                }
            if (!known) out[n++] = v;
        }
    }
    return n;
}

}  // namespace

bool is_connected(const Solid& solid, EdgeMask mask) {
    assert(mask != 0);
    int verts[60];
    int parent[60];
    int n = 0;
    auto slot = [&](int v) {
        for (int i = 0; i < n; ++i)
            if (verts[i] == v) return i;
        verts[n] = v;
        parent[n] = n;
        return n++;
    };
    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    int components = 0;
    for (EdgeMask m = mask; m != 0; m &= m - 1) {
        const auto& [a, b] = solid.edges[std::countr_zero(m)];
        const int before = n;
        const int ia = slot(a);
        const int ib = slot(b);
        components += n - before;
        const int ra = find(ia);
        const int rb = find(ib);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

bool is_planar_subset(const Solid& solid, EdgeMask mask) {
    assert(mask != 0);
    int verts[60];
    const int n = collect_endpoints(solid, mask, verts);
    Point3 points[60];
    for (int i = 0; i < n; ++i) points[i] = solid.vertices[verts[i]];
    return coplanar(std::span<const Point3>(points, static_cast<size_t>(n)));
}

EnumerationResult sweep(const Solid& solid, const RotationGroup& group,
                        const FilterConfig& config, int workers,
                        bool keep_representatives) {
    const int edge_count = solid.edge_count();
    if (edge_count > kMaxEdges)
        throw std::invalid_argument("edge count exceeds the 32-bit mask representation");
    if (workers < 1) throw std::invalid_argument("need at least one worker");

    const std::uint64_t mask_count = std::uint64_t{1} << edge_count;
    const EdgeMask full = static_cast<EdgeMask>(mask_count - 1);
    const std::span<const PermTable> tables(group.tables);

    struct Accumulator {
        std::uint64_t total = 0;
        std::array<std::uint64_t, 31> histogram{};
        std::vector<EdgeMask> representatives;
    };
    std::vector<Accumulator> parts(static_cast<size_t>(workers));

    auto run_block = [&](int w) {
        const std::uint64_t lo = mask_count * w / workers;
        const std::uint64_t hi = mask_count * (w + 1) / workers;
        Accumulator& acc = parts[w];
        if (keep_representatives)
            acc.representatives.reserve(
                static_cast<size_t>((hi - lo) / group.order() + 16));
        for (std::uint64_t m = lo; m < hi; ++m) {
            const EdgeMask mask = static_cast<EdgeMask>(m);
            if (config.exclude_empty && mask == 0) continue;
            if (config.exclude_full && mask == full) continue;
            if (!is_canonical(mask, tables)) continue;
            if (mask != 0) {
                if (config.require_connected && !is_connected(solid, mask)) continue;
                if (config.require_nonplanar && is_planar_subset(solid, mask)) continue;
            } else if (config.require_nonplanar) {
                // The empty subset counts as connected and planar.
                continue;
            }
            acc.total += 1;
            acc.histogram[std::popcount(mask)] += 1;
            if (keep_representatives) acc.representatives.push_back(mask);
        }
    };

    if (workers == 1) {
        run_block(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
        for (std::thread& t : pool) t.join();
    }

    EnumerationResult result;
    result.solid = solid.name;
    result.filters = config;
    std::array<std::uint64_t, 31> histogram{};
    for (const Accumulator& acc : parts) {
        result.total += acc.total;
        for (size_t k = 0; k < histogram.size(); ++k) histogram[k] += acc.histogram[k];
        result.representatives.insert(result.representatives.end(),
                                      acc.representatives.begin(),
                                      acc.representatives.end());
    }
    for (size_t k = 0; k < histogram.size(); ++k)
        if (histogram[k] != 0) result.histogram[static_cast<int>(k)] = histogram[k];
    return result;
}

}  // namespace edgeorbit
