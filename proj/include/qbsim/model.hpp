#pragma once

#include <string>
#include <vector>

namespace qbsim {

enum class Model { Direct, Cavity };
enum class Protocol { AlwaysOn, InteractionSwitch, DetuningSwitch };

// The detuning protocol's frequency remap admits two readings; Literal keeps
// both qubit frequencies proportional to the schedule, ChargerOnly sweeps the
// charger against a fixed battery.
enum class DetuningReading { Literal, ChargerOnly };

// Whether the detuning-protocol Hamiltonian carries a free cavity term.
enum class CavityTerm { Omit, FixedOmegaB };

// Reference for reported component energies when the qubit frequencies are
// time dependent: the instantaneous pieces, or the bare omega_b scale.
enum class EnergyReference { Instantaneous, Fixed };

enum class Subspace { Full, ConservedBlock };

// Physical parameters. omega_b is the energy unit and stays at 1; times are
// omega_b * t and energies E / omega_b throughout.
struct ModelConfig {
    double omega_b = 1.0;
    double alpha = 1.0;        // omega_C = omega_M = alpha * omega_b
    double g = 0.05;
    int n_initial = 0;
    int n_max_override = -1;   // < 0: use n_initial + 1

    Model model = Model::Cavity;
    Protocol protocol = Protocol::AlwaysOn;
    DetuningReading detuning_reading = DetuningReading::Literal;
    CavityTerm cavity_term = CavityTerm::Omit;

    int n_max() const { return n_max_override < 0 ? n_initial + 1 : n_max_override; }

    // Throws ConfigError on invalid parameters; returns soft warnings
    // (e.g. g above the 0.1 omega_b coupling-validity threshold).
    std::vector<std::string> validate() const;
};

std::string to_string(Model m);
std::string to_string(Protocol p);

} // namespace qbsim
