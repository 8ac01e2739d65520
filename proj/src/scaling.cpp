#include "tqsim/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace tqsim {

ScalingConstants scaling_constants(std::uint64_t n, double alpha, double ell1) {
    if (n == 0) throw std::invalid_argument("scaling: n must be positive");
    if (!(alpha > 1.0 && alpha <= 2.0))
        throw std::invalid_argument("scaling: alpha must lie in (1, 2]");
    if (!(ell1 > 0.0)) throw std::invalid_argument("scaling: ell1 must be positive");

    ScalingConstants c;
    c.n = n;
    c.alpha = alpha;
    c.ell1 = ell1;
    c.ell2 = 1.0 / (ell1 * ell1);
    const double nd = static_cast<double>(n);
    const double denom = 2.0 * alpha - 1.0;
    c.time_factor = std::pow(nd, alpha / denom) * ell1;
    c.space_factor = std::pow(nd, -1.0 / denom) * c.ell2;
    c.backlog_factor = std::pow(nd, 1.0 / denom) / c.ell2;
    return c;
}

double default_ell1(const ServiceModel& model) {
    const double scale = model.alpha == 2.0 ? calibrated_sum_scale_alpha2(model.x_m)
                                            : pareto_sum_scale(model);
    return std::pow(scale, model.alpha / (2.0 * model.alpha - 1.0));
}

GridPath rescale(const StepPath& path, const ScalingConstants& c, double horizon,
                 std::size_t grid_intervals) {
    if (!(horizon > 0.0) || grid_intervals == 0)
        throw std::invalid_argument("rescale: horizon and grid must be positive");
    GridPath out = GridPath::zeros(horizon, grid_intervals);
    const double unscaled_end = horizon * c.time_factor;
    if (!path.times.empty() && path.times.back() > 0.0) {
        // The path must cover the unscaled window (its last sample may sit
        // exactly at the horizon).
        if (path.times.back() < unscaled_end * (1.0 - 1e-12))
            throw std::invalid_argument("rescale: path horizon too short for requested window");
    }
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = c.space_factor * path.value_at(out.time_at(k) * c.time_factor);
    return out;
}

}  // namespace tqsim
