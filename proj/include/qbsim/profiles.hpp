#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qbsim {

enum class ProfileKind { InteractionF, DetuningG };

// erf-based switching window: ramp up around tau, ramp down around 2*tau,
// ramp width t0.
struct SwitchProfile {
    double tau = 0.0;
    double t0 = 0.0;
    ProfileKind kind = ProfileKind::InteractionF;

    // Hard errors throw ConfigError; soft issues (t0 > tau/10) are returned.
    std::vector<std::string> validate() const;
};

// f(t) = [erf((t-tau)/t0) - erf((t-2tau)/t0)] / (2 erf(tau/(2 t0)))
double f_switch(double t, const SwitchProfile& p);

// f'(t) = [exp(-((t-tau)/t0)^2) - exp(-((t-2tau)/t0)^2)]
//         / (sqrt(pi) t0 erf(tau/(2 t0)))
double f_switch_derivative(double t, const SwitchProfile& p);

// Detuning schedule: equals alpha in the tails, 1 on the plateau.
// g(t) = (1 - alpha) f(t) + alpha.
double g_detune(double t, const SwitchProfile& p, double alpha);
double g_detune_derivative(double t, const SwitchProfile& p, double alpha);

// Scalar schedule u(t) with analytic derivative.
struct Schedule {
    std::function<double(double)> u;
    std::function<double(double)> u_dot;
    double max_abs_u = 1.0;  // bound used for step-size diagnostics

    static Schedule constant(double value);
    static Schedule interaction(const SwitchProfile& p);
    static Schedule detuning(const SwitchProfile& p, double alpha);
};

} // namespace qbsim
