#include "edgeorbit/io.hpp"

#include <bit>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace edgeorbit {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

void write_representatives(const EnumerationResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    char line[16];
    for (EdgeMask mask : result.representatives) {
        std::snprintf(line, sizeof line, "%x\n", mask);
        out << line;
    }
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::vector<EdgeMask> read_representatives(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<EdgeMask> masks;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        masks.push_back(static_cast<EdgeMask>(std::stoul(line, nullptr, 16)));
    }
    return masks;
}

void write_histogram_csv(const EnumerationResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "edges,count\n";
    for (const auto& [edges, count] : result.histogram)
        out << edges << ',' << count << '\n';
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

void write_wireframe(const Solid& solid, EdgeMask mask, const std::string& path) {
    assert((mask >> solid.edge_count()) == 0);
    std::ofstream out = open_out(path);
    out << std::fixed << std::setprecision(9);
    for (const Point3& p : solid.vertices)
        out << "v " << p.x.to_double() << ' ' << p.y.to_double() << ' '
            << p.z.to_double() << '\n';
    for (EdgeMask m = mask; m != 0; m &= m - 1) {
        const auto& [lo, hi] = solid.edges[std::countr_zero(m)];
        out << "l " << lo + 1 << ' ' << hi + 1 << '\n';
    }
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace edgeorbit
