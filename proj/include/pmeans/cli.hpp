#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmeans/report.hpp"
#include "pmeans/selection.hpp"
#include "pmeans/transform.hpp"

namespace pmeans {

// Everything one command invocation needs. run_cli fills it from argv;
// run() consumes it, so programmatic callers can skip the flag parser.
struct run_config {
    std::string subcommand;
    std::string input_path;
    std::vector<mean_kind> means;          // empty = all three
    std::vector<transform_kind> transforms;  // predict only; empty = all three
    output_format format = output_format::text;
    std::string plot_path;                 // empty = no plot

    // synthesize an equally weighted uniform grid instead of reading a file
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    std::optional<double> grid_step;

    attraction_kernel kernel = attraction_kernel::cauchy;
    bool weighted = false;
    std::optional<double> x;               // attraction probe / velocity target
    double w_step = 0.01;
    double base = 1000.0;
    double penalty = 30.0;
    double scale = 2.0;
    int boundary_points = 64;
};

// Exit status 0 on success, 1 on a usage problem, 2 on a data or domain
// problem. The report goes to `out`, diagnostics to `err`.
int run(const run_config& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pmeans
