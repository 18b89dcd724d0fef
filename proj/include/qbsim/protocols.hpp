#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbsim/eig.hpp"
#include "qbsim/model.hpp"
#include "qbsim/observables.hpp"
#include "qbsim/propagator.hpp"

namespace qbsim {

struct GridOverrides {
    std::optional<double> t_end;
    std::optional<double> dt_sample;
    std::optional<double> dt_step;

    TimeGrid resolve(double default_t_end) const;
};

struct TuneResult {
    double tau = 0.0;        // chosen window parameter (snapped to the step lattice)
    double t_star = 0.0;     // first-maximum time of the always-on run
    double plateau_e_b = 0.0;
};

// Choose tau so the interaction switches off at the first stored-energy
// maximum: probe with the interaction always on, set tau to the maximum time,
// then refine with an 11-point scan over [0.9, 1.1] tau maximizing the
// post-switch-off plateau of E_B.
TuneResult tune_tau(const ModelConfig& cfg, double t0, EigCache& cache,
                    const GridOverrides& grid = {});

struct RunOptions {
    EnergyReference reference = EnergyReference::Instantaneous;
    Subspace subspace = Subspace::Full;
    bool check_convergence = true;
    GridOverrides grid;
};

struct RunResult {
    Trajectory trajectory;
    std::optional<TransferSummary> summary;  // absent if E_B never peaks
    std::optional<double> tau_used;
    double t_star = 0.0;  // populated when tau was tuned
    double dt_step_used = 0.0;
    bool converged = false;
    std::vector<std::string> warnings;
};

// One full experiment: optional tau tuning, evolution, trajectory assembly.
// tau empty + interaction_switch protocol -> auto-tune.
RunResult run_single(const ModelConfig& cfg, std::optional<double> tau, double t0,
                     const RunOptions& options, EigCache* shared_cache = nullptr);

struct SweepRecord {
    double value = 0.0;  // swept n or alpha
    double e_b_max = 0.0;
    double t_b_max = 0.0;
    double e_c_bar = 0.0;
    double tau_used = 0.0;
    std::optional<double> sqrt_n_t;  // sqrt(n) * t_b_max, photon sweeps only
};

enum class SweepVariable { PhotonNumber, Alpha };

struct SweepOptions {
    RunOptions run;           // convergence checking defaults off inside sweeps
    bool keep_trajectories = false;
    unsigned max_workers = 0;  // 0: hardware concurrency (capped)
    SweepOptions() { run.check_convergence = false; }
};

struct SweepResult {
    std::vector<SweepRecord> records;           // ordered by swept value
    std::vector<Trajectory> trajectories;       // when keep_trajectories
    std::vector<std::string> failures;          // per-point error messages
};

// Photon-number sweep of the tuned switched transfer; each point re-tunes tau.
SweepResult sweep_photons(const ModelConfig& cfg, const std::vector<int>& n_values,
                          double t0, const SweepOptions& options = {});

// Same machinery sweeping the mismatch parameter.
SweepResult sweep_alpha(const ModelConfig& cfg, const std::vector<double>& alphas,
                        double t0, const SweepOptions& options = {});

struct DetuningRunSpec {
    double alpha = 1.0;
    double tau = 0.0;
};

struct StabilityReport {
    double alpha = 0.0;
    double tau = 0.0;
    double peak_to_peak = 0.0;  // of E_B over t in (2 tau + 10 t0, t_end]
};

struct DetuningProtocolResult {
    std::vector<RunResult> runs;
    std::vector<StabilityReport> stability;
};

// Detuning-protocol comparison across mismatch values, with the post-window
// storage-stability metric.
DetuningProtocolResult run_detuning_protocol(const ModelConfig& cfg,
                                             const std::vector<DetuningRunSpec>& specs,
                                             double t0, const RunOptions& options);

// The four benchmark transfers: {direct, cavity} x {alpha values}, each with
// tuned tau.
std::vector<RunResult> run_comparison(const ModelConfig& base, const std::vector<double>& alphas,
                                      const RunOptions& options);

} // namespace qbsim
