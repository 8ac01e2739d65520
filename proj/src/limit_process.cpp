#include "tqsim/limit_process.hpp"

#include <cmath>
#include <stdexcept>

#include "tqsim/distributions.hpp"

namespace tqsim {

double stable_coefficient(double mean_service, double alpha) {
    if (!(mean_service > 0.0))
        throw std::invalid_argument("stable_coefficient: mean service time must be positive");
    return std::pow(mean_service, -(alpha + 1.0) / alpha);
}

GridPath simulate_limit_free(const LimitSpec& spec, Pcg64& rng) {
    if (!(spec.q0 >= 0.0)) throw std::invalid_argument("limit: q0 must be non-negative");
    if (!(spec.dt > 0.0) || !(spec.horizon > 0.0))
        throw std::invalid_argument("limit: dt and horizon must be positive");

    const auto steps = static_cast<std::size_t>(std::llround(spec.horizon / spec.dt));
    if (steps == 0) throw std::invalid_argument("limit: horizon shorter than one grid step");
    GridPath path;
    path.dt = spec.dt;
    path.values.resize(steps + 1);
    path.values[0] = spec.q0;

    const double half_drift = 0.5 * spec.lambda * spec.lambda;
    double stable_sum = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        if (spec.s_alpha != 0.0)
            stable_sum += sample_stable_increment(spec.alpha, spec.dt, rng);
        const double t = spec.dt * static_cast<double>(k);
        path.values[k] = spec.q0 + spec.s_alpha * stable_sum - half_drift * t * t;
    }
    return path;
}

GridPath simulate_limit_free(const LimitSpec& spec, const SeedSpec& seed) {
    Pcg64 rng = Pcg64::stream(seed, StreamRole::stable_increments);
    return simulate_limit_free(spec, rng);
}

GridPath simulate_limit_reflected(const LimitSpec& spec, const SeedSpec& seed) {
    return reflect(simulate_limit_free(spec, seed));
}

std::optional<double> busy_period(const LimitSpec& spec, const SeedSpec& seed) {
    return hitting_time(simulate_limit_free(spec, seed), 0.0);
}

}  // namespace tqsim
