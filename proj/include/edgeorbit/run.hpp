#pragma once

#include <string>

#include "edgeorbit/enumerate.hpp"

namespace edgeorbit {

enum class Subcommand { enumerate_subsets, burnside, verify, dump_group };

struct RunConfig {
    Subcommand subcommand = Subcommand::enumerate_subsets;
    std::string solid;  // built-in name or path to a solid-spec file
    FilterConfig filters;
    int workers = 0;  // 0 means hardware concurrency
    std::string representatives_path;
    std::string histogram_path;
    std::string obj_dir;
    bool no_representatives = false;
};

// Built-in name, or a path to load. Throws on unknown names/unreadable files.
Solid resolve_solid(const std::string& selector);

// Executes one subcommand. Exit status 0 on success, 1 on validation
// failure (verify mismatch), 2 on usage or input errors.
int run(const RunConfig& config);

}  // namespace edgeorbit
