#ifndef HOLES3D_CLI_HPP
#define HOLES3D_CLI_HPP

#include <optional>
#include <string>

#include "holes3d/report.hpp"

namespace holes3d {

/// Parsed command configuration shared by all subcommands.
struct RunConfig {
    int m = 2;
    int path_depth = 0;    // 0 = derive from m
    int gamma_length = 0;  // 0 = derive from m
    std::string t = "2";
    std::string zeta2 = "33/20";
    std::string zeta3 = "6/5";
    std::optional<std::string> eps;        // "p/q" override, skips the validation loop
    std::optional<std::string> resolution; // oracle cell size "p/q"
    int threads = 0;                       // 0 = pick from hardware
    unsigned long long seed = 42;
    std::optional<std::string> out;        // output directory
    unsigned precision = 17;               // OBJ decimal digits
    int trials = 50;                       // random-bound repetitions
    int max_bodies = 8;                    // random-bound family size cap
    bool warmup = false;                   // oracle subcommand: use the warm-up family

    ConstructionParams to_params() const;  // throws InputError on bad rationals/bounds
    int effective_threads() const;
};

/// Outcome of one command: the process exit code and the full JSON report.
/// Exit codes: 0 = all asserted identities hold, 2 = input/construction/
/// resource failure, 3 = an identity assertion failed.
struct CommandResult {
    int exit_code = 0;
    Json report;
    std::string csv; // empty when the command has no tabular output
};

CommandResult cmd_warmup(const RunConfig& cfg);
CommandResult cmd_holes(const RunConfig& cfg);
CommandResult cmd_random_bound(const RunConfig& cfg);
CommandResult cmd_export(const RunConfig& cfg);
CommandResult cmd_oracle(const RunConfig& cfg);

/// Full CLI: parses argv, dispatches, writes reports, prints JSON to stdout.
int run_cli(int argc, char** argv);

} // namespace holes3d

#endif
