#pragma once

// Heavy-traffic scaling: the time window grows like n^(alpha/(2 alpha - 1))
// and space shrinks like n^(-1/(2 alpha - 1)), up to the constant ell1
// that carries the service-distribution norming. With ell2 = ell1^-2 the
// drift normalization closes exactly: space_factor * time_factor^2 / n = 1.

#include <cstdint>

#include "tqsim/distributions.hpp"
#include "tqsim/paths.hpp"

namespace tqsim {

struct ScalingConstants {
    std::uint64_t n = 0;
    double alpha = 0.0;
    double ell1 = 1.0;            // norming constant (slowly varying part, held constant)
    double ell2 = 1.0;            // ell1^-2, exactly
    double time_factor = 1.0;     // n^(alpha/(2 alpha - 1)) * ell1
    double space_factor = 1.0;    // n^(-1/(2 alpha - 1)) * ell2
    double backlog_factor = 1.0;  // n^(1/(2 alpha - 1)) / ell2
};

ScalingConstants scaling_constants(std::uint64_t n, double alpha, double ell1);

// ell1 that matches the project's unit stable convention for the given
// service model: pareto_sum_scale(model)^(alpha/(2 alpha - 1)), with the
// calibrated constant substituted at alpha = 2.
double default_ell1(const ServiceModel& model);

// Scaled view of a prelimit path on a uniform grid over [0, horizon] in
// scaled time: values are space_factor * path(t * time_factor).
GridPath rescale(const StepPath& path, const ScalingConstants& c, double horizon,
                 std::size_t grid_intervals);

}  // namespace tqsim
