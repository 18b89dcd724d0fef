#pragma once

#include <string>

#include "qbsim/config.hpp"

namespace qbsim {

// Exit codes shared by the CLI and the pipeline entry points.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericsError = 3;

struct CliOptions {
    std::string out_dir = ".";
    std::optional<double> dt_step;
    std::optional<double> t_end;
    bool quiet = false;
};

// Execute a parsed config; write outputs under options.out_dir using the
// config's prefix. These are the subcommand bodies; the CLI is a thin shell
// around them and tests drive them directly.
int cmd_run(const RunConfig& cfg, const CliOptions& options);
int cmd_sweep(const RunConfig& cfg, const CliOptions& options);
int cmd_profile(const RunConfig& cfg, const CliOptions& options);
int cmd_tune_tau(const RunConfig& cfg, const CliOptions& options);

// Convenience wrapper: load the config for `command`, apply CLI overrides,
// dispatch, map errors to exit codes (2 config, 3 numerics).
int run_command(Command command, const std::string& config_path, const CliOptions& options);

} // namespace qbsim
