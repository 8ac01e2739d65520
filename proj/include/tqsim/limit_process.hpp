#pragma once

// The limit object: a spectrally positive alpha-stable motion with a
// negative parabolic drift,
//
//     L(t) = q0 + s_alpha * S(t) - (lambda^2 / 2) * t^2,
//
// simulated on a uniform grid. Stable increments are sampled exactly,
// so grid-point marginals are exact in distribution; only functionals
// that look between grid points (reflection infima, hitting times) are
// resolution-limited.

#include <cstdint>
#include <optional>

#include "tqsim/paths.hpp"
#include "tqsim/rng.hpp"

namespace tqsim {

struct LimitSpec {
    double alpha = 1.5;
    double q0 = 0.0;       // initial value, >= 0
    double lambda = 1.0;   // drift rate; the parabola coefficient is lambda^2 / 2
    double s_alpha = 1.0;  // stable coefficient
    double horizon = 1.0;  // scaled time
    double dt = 1e-3;      // grid step
};

// Coefficient of the stable term implied by a mean service time:
// mean^-((alpha + 1) / alpha).
double stable_coefficient(double mean_service, double alpha);

GridPath simulate_limit_free(const LimitSpec& spec, Pcg64& rng);
GridPath simulate_limit_free(const LimitSpec& spec, const SeedSpec& seed);

GridPath simulate_limit_reflected(const LimitSpec& spec, const SeedSpec& seed);

// First grid time at which the free path is <= 0; nullopt if it stays
// positive over the whole horizon. Never earlier than the true passage.
std::optional<double> busy_period(const LimitSpec& spec, const SeedSpec& seed);

}  // namespace tqsim
