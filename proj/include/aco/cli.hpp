#pragma once

#include "aco/oscillator.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aco::cli {

enum class OutputFormat { csv, json };

/// Fully validated configuration shared by the subcommands. Flags map onto
/// these fields one to one; an optional key=value config file fills in
/// whatever the command line left unset.
struct RunConfig {
    OscillatorParams params;
    double span = 50.0;
    double dt = 1e-3;
    int q = 50;
    std::pair<double, double> h_bracket{1e-6, 1.5};
    std::optional<double> h_override;
    OutputFormat format = OutputFormat::csv;
    std::string output_path = "-";  ///< "-" writes to the output stream
    int stride = 10;
};

/// Parse and execute one subcommand. `args` excludes the program name.
/// Exit codes: 0 success, 2 invalid arguments, 3 domain or integration error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aco::cli
