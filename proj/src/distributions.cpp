#include "tqsim/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tqsim/stats.hpp"

namespace tqsim {

ServiceModel ServiceModel::make(double alpha, double x_m) {
    if (!(alpha > 1.0) || !(alpha <= 2.0))
        throw std::invalid_argument("ServiceModel: alpha must lie in (1, 2]");
    if (!(x_m > 0.0))
        throw std::invalid_argument("ServiceModel: x_m must be positive");
    ServiceModel m;
    m.alpha = alpha;
    m.x_m = x_m;
    m.mean = alpha * x_m / (alpha - 1.0);
    m.lambda = 1.0 / m.mean;
    return m;
}

double exponential_from_uniform(double rate, double u) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be positive");
    return -std::log(u) / rate;
}

double pareto_from_uniform(const ServiceModel& model, double u) {
    return model.x_m * std::pow(u, -1.0 / model.alpha);
}

double sample_exponential(double rate, Pcg64& rng) {
    return exponential_from_uniform(rate, rng.uniform_open_closed());
}

double sample_pareto(const ServiceModel& model, Pcg64& rng) {
    return pareto_from_uniform(model, rng.uniform_open_closed());
}

double sample_stable_standard(double alpha, Pcg64& rng) {
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("stable: alpha must lie in (1, 2]");

    const double u = std::numbers::pi * (rng.uniform_open_open() - 0.5);
    const double w = -std::log(rng.uniform_open_closed());

    if (alpha == 2.0) {
        // Degenerate endpoint of the S1 family: N(0, 2).
        return 2.0 * std::sin(u) * std::sqrt(w);
    }

    // Chambers-Mallows-Stuck for S(alpha, beta=1, 1; 1).
    const double t = std::tan(std::numbers::pi * alpha / 2.0);  // negative on (1,2)
    const double shift = std::atan(t) / alpha;                  // beta * tan term
    const double scale = std::pow(1.0 + t * t, 0.5 / alpha);
    const double a = alpha * (u + shift);
    return scale * std::sin(a) / std::pow(std::cos(u), 1.0 / alpha) *
           std::pow(std::cos(u - a) / w, (1.0 - alpha) / alpha);
}

double sample_stable_increment(double alpha, double dt, Pcg64& rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("stable increment: dt must be positive");
    return std::pow(dt, 1.0 / alpha) * sample_stable_standard(alpha, rng);
}

double pareto_sum_scale(const ServiceModel& model) {
    if (model.alpha >= 2.0)
        throw std::invalid_argument(
            "pareto_sum_scale: no fixed norming constant at alpha = 2; "
            "use calibrated_sum_scale_alpha2");
    const double a = model.alpha;
    const double body = std::tgamma(2.0 - a) *
                        std::abs(std::cos(std::numbers::pi * a / 2.0)) / (a - 1.0);
    return model.x_m * std::pow(body, 1.0 / a);
}

double calibrate_pareto_sum_scale(const ServiceModel& model, std::uint64_t k,
                                  std::uint64_t reps, const SeedSpec& seed) {
    if (k == 0 || reps == 0)
        throw std::invalid_argument("calibrate: k and reps must be positive");

    const double norm = std::pow(static_cast<double>(k), 1.0 / model.alpha);
    std::vector<double> z(reps);
    for (std::uint64_t r = 0; r < reps; ++r) {
        Pcg64 rng = Pcg64::stream({seed.master_seed, seed.replication_index + r},
                                  StreamRole::service_times);
        double sum = 0.0;
        for (std::uint64_t i = 0; i < k; ++i) sum += sample_pareto(model, rng);
        z[r] = (sum - static_cast<double>(k) * model.mean) / norm;
    }
    std::sort(z.begin(), z.end());
    auto quantile = [&](double p) {
        const double pos = p * static_cast<double>(reps - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, static_cast<std::size_t>(reps - 1));
        const double frac = pos - static_cast<double>(lo);
        return z[lo] * (1.0 - frac) + z[hi] * frac;
    };
    const double spread = quantile(0.75) - quantile(0.25);

    double unit_spread;
    if (model.alpha == 2.0) {
        // N(0,2) quartile spread.
        unit_spread = 2.0 * 0.6744897501960817 * std::sqrt(2.0);
    } else {
        unit_spread = stable_quantile(model.alpha, 0.75) - stable_quantile(model.alpha, 0.25);
    }
    return spread / unit_spread;
}

double calibrated_sum_scale_alpha2(double x_m) {
    // Measured with calibrate_pareto_sum_scale(ServiceModel::make(2, 1),
    // k = 2500, reps = 200000, master seed 20240811); see tools `calibrate`.
    constexpr double scale_at_xm1 = 3.1259;
    return scale_at_xm1 * x_m;
}

}  // namespace tqsim
