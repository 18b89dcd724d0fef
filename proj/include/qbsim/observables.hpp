#pragma once

#include <cstddef>
#include <vector>

#include "qbsim/hamiltonian.hpp"
#include "qbsim/model.hpp"
#include "qbsim/propagator.hpp"

namespace qbsim {

// All figure-of-merit series over one evolution, energies in units of
// omega_b. e_m is identically zero whenever the model carries no cavity term
// (direct model; detuning protocol with the term omitted).
struct Trajectory {
    std::vector<double> times;
    std::vector<double> e_c, e_b, e_m, e_int;
    std::vector<double> p;
    std::vector<double> w_integral;
    std::vector<double> w_conservation;
    std::vector<double> norm;
    std::vector<double> n_exc;
};

// <psi_t|op|psi_t> per sample (op Hermitian; real part taken).
std::vector<double> expectation_series(const EvolveResult& run, const ComplexMatrix& op);

// E(t) = <psi_t|H_i|psi_t> - <psi_0|H_i|psi_0> for a static component piece.
std::vector<double> component_energy(const EvolveResult& run, const ComplexMatrix& h_component);

// E_int(t) = u(t)<psi_t|drv|psi_t> + <psi_t|stat|psi_t> minus its t = 0 value.
std::vector<double> interaction_energy(const EvolveResult& run, const HamiltonianDecomposition& dec);

// P(t) = u'(t) <psi_t|h_driven|psi_t>
std::vector<double> power_series(const EvolveResult& run, const HamiltonianDecomposition& dec);

// Cumulative integral of a sampled series: composite Simpson pairs on the
// uniform grid, trapezoid for the dangling interval at odd prefix lengths.
std::vector<double> work_by_integral(const std::vector<double>& p, const std::vector<double>& times);

struct ConservationWork {
    std::vector<double> simplified;  // (1 - alpha) E_B + E_int
    std::vector<double> full_sum;    // E_C + E_B + E_M + E_int
    double max_route_mismatch = 0.0;
};

// Both conservation routes from instantaneous component energies. The
// simplified identity holds for the fixed-frequency models; the detuning
// protocol reports the full sum.
ConservationWork work_by_conservation(const std::vector<double>& e_c, const std::vector<double>& e_b,
                                      const std::vector<double>& e_m, const std::vector<double>& e_int,
                                      double alpha);

struct LocalMax {
    double value = 0.0;
    double time = 0.0;
    std::size_t index = 0;
};

// Earliest interior sample that is >= both neighbours with prominence above
// threshold over the running minimum; position refined by a quadratic fit.
// Throws NumericsError for a series with no qualifying maximum.
LocalMax first_local_max(const std::vector<double>& series, const std::vector<double>& times,
                         double prominence_threshold = 1e-6);

struct TransferSummary {
    double e_b_max = 0.0;
    double t_b_max = 0.0;
    double e_c_bar = 0.0;   // E_C at t_b_max
    double tau_used = 0.0;  // 0 when no switching window applies
};

// Assemble the full trajectory. `reference` selects how component energies
// of a frequency-swept run are reported; conservation bookkeeping always uses
// the instantaneous pieces. For the detuning protocol w_conservation is the
// full sum; otherwise the simplified route.
Trajectory compute_trajectory(const EvolveResult& run, const HamiltonianDecomposition& dec,
                              const ModelConfig& cfg, EnergyReference reference);

TransferSummary summarize_transfer(const Trajectory& traj, double tau_used);

} // namespace qbsim
