#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "edgeorbit/run.hpp"

namespace {

// Parses the --filters value: a comma-separated subset of
// connected,nonplanar,proper,nonempty. Unknown tokens are rejected.
bool parse_filters(const std::string& csv, edgeorbit::FilterConfig& filters,
                   std::string& bad_token) {
    filters.require_connected = false;
    filters.require_nonplanar = false;
    filters.exclude_full = false;
    filters.exclude_empty = false;
    std::istringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token == "connected")
            filters.require_connected = true;
        else if (token == "nonplanar")
            filters.require_nonplanar = true;
        else if (token == "proper")
            filters.exclude_full = true;
        else if (token == "nonempty")
            filters.exclude_empty = true;
        else {
            bad_token = token;
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate rotation-distinct edge subsets of convex solids"};
    app.require_subcommand(1);

    edgeorbit::RunConfig config;
    std::string filters_csv;
    bool no_filter = false;

    auto add_solid = [&](CLI::App* cmd) {
        cmd->add_option("--solid", config.solid,
                        "Built-in solid name or path to a solid description file")
            ->required();
    };
    auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", config.workers, "Worker thread count")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Count and collect canonical edge subsets");
    add_solid(enumerate);
    add_workers(enumerate);
    CLI::Option* filters_opt = enumerate->add_option(
        "--filters", filters_csv,
        "Comma-separated filters: connected,nonplanar,proper,nonempty");
    enumerate->add_flag("--no-filter", no_filter, "Disable all filters")
        ->excludes(filters_opt);
    enumerate->add_option("--reps", config.representatives_path,
                          "Write representative masks (hex, one per line)");
    enumerate->add_flag("--no-reps", config.no_representatives,
                        "Skip collecting representatives (count only)");
    enumerate->add_option("--histogram", config.histogram_path,
                          "Write edge-count histogram CSV");
    enumerate->add_option("--obj", config.obj_dir,
                          "Write one OBJ wireframe per representative");

    CLI::App* burnside = app.add_subcommand(
        "burnside", "Print the unfiltered orbit count from the cycle formula");
    add_solid(burnside);

    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check the unfiltered sweep against the cycle formula");
    add_solid(verify);
    add_workers(verify);

    CLI::App* dump_group = app.add_subcommand(
        "dump-group", "Print the rotation group in cycle notation");
    add_solid(dump_group);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (enumerate->parsed()) {
        config.subcommand = edgeorbit::Subcommand::enumerate_subsets;
        if (no_filter) {
            config.filters.require_connected = false;
            config.filters.require_nonplanar = false;
            config.filters.exclude_full = false;
            config.filters.exclude_empty = false;
        } else if (filters_opt->count() > 0) {
            std::string bad;
            if (!parse_filters(filters_csv, config.filters, bad)) {
                std::cerr << "error: unknown filter '" << bad << "'\n";
                return 2;
            }
        }
    } else if (burnside->parsed()) {
        config.subcommand = edgeorbit::Subcommand::burnside;
    } else if (verify->parsed()) {
        config.subcommand = edgeorbit::Subcommand::verify;
    } else {
        config.subcommand = edgeorbit::Subcommand::dump_group;
    }

    return edgeorbit::run(config);
}
