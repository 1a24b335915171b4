/// @file cli.hpp
/// @brief Command-line entry point tying the kit together.
#ifndef QRK_CLI_HPP
#define QRK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qrk::cli {

/// Parsed command-line configuration. Exit-code policy: 0 all pass, 1 any
/// verification failure, 2 usage or parse error.
struct CliConfig {
    std::string subcommand;
    long order = 24;
    long q_order = 24;
    long p = 0;
    long m = 0;
    long a = 0;
    long a_max = 0;
    long seed = -1;
    bool json = false;
    bool timings = false;
};

/// Runs the CLI; diagnostics go to `err`, results to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrk::cli

#endif
