#include "edgeorbit/run.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <thread>

#include "edgeorbit/counting.hpp"
#include "edgeorbit/io.hpp"
#include "edgeorbit/solid.hpp"
#include "edgeorbit/symmetry.hpp"

namespace edgeorbit {

namespace {

int effective_workers(int requested) {
    if (requested > 0) return requested;
    unsigned n = std::thread::hardware_concurrency();
    return n ? static_cast<int>(n) : 1;
}

std::string hex_name(EdgeMask mask) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", mask);
    return buf;
}

int run_enumerate(const RunConfig& config) {
    if (config.no_representatives && !config.representatives_path.empty()) {
        std::cerr << "error: --no-reps conflicts with --reps\n";
        return 2;
    }
    Solid solid = resolve_solid(config.solid);
    RotationGroup group = close_group(solid);

    bool keep = !config.no_representatives;
    auto t0 = std::chrono::steady_clock::now();
    EnumerationResult result =
        sweep(solid, group, config.filters, effective_workers(config.workers), keep);
    auto t1 = std::chrono::steady_clock::now();
    double seconds = std::chrono::duration<double>(t1 - t0).count();

    if (!config.representatives_path.empty())
        write_representatives(result, config.representatives_path);
    if (!config.histogram_path.empty())
        write_histogram_csv(result, config.histogram_path);
    if (!config.obj_dir.empty()) {
        std::filesystem::create_directories(config.obj_dir);
        for (EdgeMask mask : result.representatives) {
            std::filesystem::path path =
                std::filesystem::path(config.obj_dir) / (hex_name(mask) + ".obj");
            write_wireframe(solid, mask, path.string());
        }
    }

    char line[160];
    std::snprintf(line, sizeof line, "%s, %s, %llu, %.3f\n", solid.name.c_str(),
                  describe(config.filters).c_str(),
                  static_cast<unsigned long long>(result.total), seconds);
    std::cout << line;
    return 0;
}

int run_burnside(const RunConfig& config) {
    Solid solid = resolve_solid(config.solid);
    RotationGroup group = close_group(solid);
    std::cout << burnside_orbit_count(group, solid.edge_count()) << "\n";
    return 0;
}

int run_verify(const RunConfig& config) {
    Solid solid = resolve_solid(config.solid);
    RotationGroup group = close_group(solid);

    FilterConfig none;
    none.require_connected = false;
    none.require_nonplanar = false;
    none.exclude_empty = false;
    none.exclude_full = false;

    EnumerationResult swept =
        sweep(solid, group, none, effective_workers(config.workers), false);
    std::uint64_t expected = burnside_orbit_count(group, solid.edge_count());

    if (swept.total != expected) {
        std::cout << solid.name << ": mismatch (sweep " << swept.total
                  << ", orbit-count formula " << expected << ")\n";
        return 1;
    }
    std::cout << solid.name << ": ok (" << expected << " orbits)\n";
    return 0;
}

int run_dump_group(const RunConfig& config) {
    Solid solid = resolve_solid(config.solid);
    RotationGroup group = close_group(solid);
    std::cout << "order " << group.order() << "\n";
    for (const EdgePermutation& g : group.elements)
        std::cout << cycle_notation(g) << "\n";
    return 0;
}

}  // namespace

Solid resolve_solid(const std::string& selector) {
    if (is_builtin_solid_name(selector)) return builtin_solid(selector);
    return load_solid_file(selector);
}

int run(const RunConfig& config) {
    try {
        switch (config.subcommand) {
            case Subcommand::enumerate_subsets:
                return run_enumerate(config);
            case Subcommand::burnside:
                return run_burnside(config);
            case Subcommand::verify:
                return run_verify(config);
            case Subcommand::dump_group:
                return run_dump_group(config);
        }
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace edgeorbit
