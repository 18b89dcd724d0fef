#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbsim/model.hpp"
#include "qbsim/protocols.hpp"

namespace qbsim {

struct SweepSpec {
    SweepVariable variable = SweepVariable::PhotonNumber;
    std::vector<int> n_values;
    std::vector<double> alpha_values;
};

// One JSON document drives a whole run; configs double as reproduction
// recipes (see figures/). Unknown keys are rejected.
struct RunConfig {
    ModelConfig model;
    std::optional<double> tau;  // absent: auto-tune (interaction_switch only)
    std::optional<double> t0;
    EnergyReference reference = EnergyReference::Instantaneous;
    Subspace subspace = Subspace::Full;
    GridOverrides grid;
    std::optional<SweepSpec> sweep;
    std::optional<std::string> out_prefix;

    std::vector<std::string> warnings;  // collected during parsing
};

enum class Command { Run, Sweep, Profile, TuneTau };

// Parse + validate against the schema for the given command.
// Throws ConfigError with a descriptive message.
RunConfig load_run_config(const std::string& path, Command command);
RunConfig parse_run_config(const std::string& json_text, Command command);

} // namespace qbsim
