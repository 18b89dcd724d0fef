#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbsim/config.hpp"
#include "qbsim/observables.hpp"
#include "qbsim/protocols.hpp"

namespace qbsim {

// Round-trip-safe decimal formatting (17 significant digits).
std::string format_double(double v);

// Columns: t,e_c,e_b,e_m,e_int,p,w_integral,w_conservation,norm,n_exc
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

// Columns: value,e_b_max,t_b_max,sqrt_n_t,e_c_bar,tau_used
// sqrt_n_t is left empty for alpha sweeps.
void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records);

// Columns: t,u,u_dot
void write_profile_csv(const std::string& path, const std::vector<double>& t,
                       const std::vector<double>& u, const std::vector<double>& u_dot);

struct SummaryData {
    std::string model;
    double alpha = 0.0;
    double g = 0.0;
    int n_initial = 0;
    std::optional<double> tau_used;
    std::optional<double> t0;
    std::optional<double> e_b_max;
    std::optional<double> t_b_max;
    std::optional<double> e_c_bar;
    std::optional<double> w_final;
    double dt_step = 0.0;
    bool converged = false;
};

// Deterministic apart from the metadata.generated_at field.
void write_summary_json(const std::string& path, const SummaryData& data);

} // namespace qbsim
