#pragma once

#include <string>
#include <vector>

#include "qbsim/eig.hpp"
#include "qbsim/hamiltonian.hpp"
#include "qbsim/model.hpp"

namespace qbsim {

using StateVector = std::vector<cplx>;

// |1_C, 0_B, n_initial>
StateVector initial_state(const ModelConfig& cfg, const HilbertSpace& space);

// Uniform output samples at dt_sample, internal stepping at dt_step. dt_step
// is snapped to the nearest exact divisor of dt_sample so every sample time
// lands on a step boundary.
struct TimeGrid {
    double t_end = 0.0;
    double dt_sample = 0.05;
    double dt_step = 0.005;

    int substeps_per_sample() const;
    double effective_dt_step() const { return dt_sample / substeps_per_sample(); }
    std::size_t sample_count() const;
    double sample_time(std::size_t k) const { return k * dt_sample; }

    std::vector<std::string> validate(const HamiltonianDecomposition& dec) const;
};

struct EvolveResult {
    std::vector<double> times;
    std::vector<StateVector> states;
    double max_norm_error = 0.0;
};

// Exponential midpoint rule: per step apply exp(-i H(t_mid) dt) through the
// eigendecomposition of H at the step midpoint. Exact for constant H;
// unitary up to eigensolver round-off. Throws NumericsError if the norm
// drifts beyond 1e-9.
EvolveResult evolve(const StateVector& psi0, const HamiltonianDecomposition& dec,
                    const TimeGrid& grid, EigCache& cache);

struct ConvergenceReport {
    double max_deviation = 0.0;  // max over samples of |psi_dt - psi_dt/2|
    bool passed = false;
    double dt_step = 0.0;
};

// Re-runs with half the step and reports the largest state deviation.
ConvergenceReport convergence_check(const StateVector& psi0, const HamiltonianDecomposition& dec,
                                    const TimeGrid& grid, EigCache& cache);

struct SolverResult {
    EvolveResult evolution;
    double dt_step_used = 0.0;
    bool converged = false;
};

// Halves dt_step (up to max_halvings) until the self-convergence criterion
// passes; returns the accepted evolution.
SolverResult evolve_converged(const StateVector& psi0, const HamiltonianDecomposition& dec,
                              TimeGrid grid, EigCache& cache, int max_halvings = 4);

} // namespace qbsim
