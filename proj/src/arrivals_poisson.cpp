#include "tqsim/arrivals_poisson.hpp"

#include <stdexcept>

#include "tqsim/distributions.hpp"

namespace tqsim {

std::int64_t MarkedPoissonRun::accepted_count() const {
    std::int64_t c = 0;
    for (auto a : accepted) c += a;
    return c;
}

StepPath MarkedPoissonRun::arrivals_path() const {
    StepPath p;
    std::int64_t c = 0;
    for (std::size_t i = 0; i < event_times.size(); ++i) {
        c += accepted[i];
        p.append(event_times[i], static_cast<double>(c));
    }
    return p;
}

MarkedPoissonRun simulate_marked_poisson(std::uint64_t n, double clock_rate, double horizon,
                                         const SeedSpec& seed) {
    if (n == 0) throw std::invalid_argument("marked poisson: n must be positive");
    if (!(clock_rate > 0.0) || !(horizon > 0.0))
        throw std::invalid_argument("marked poisson: rate and horizon must be positive");

    Pcg64 epoch_rng = Pcg64::stream(seed, StreamRole::poisson_epochs);
    Pcg64 mark_rng = Pcg64::stream(seed, StreamRole::thinning_uniforms);

    MarkedPoissonRun run;
    run.n = n;
    run.horizon = horizon;

    const double pooled_rate = static_cast<double>(n) * clock_rate;
    const double nd = static_cast<double>(n);
    double t = 0.0;
    std::int64_t distinct = 0;
    std::int64_t repeats = 0;
    while (true) {
        t += sample_exponential(pooled_rate, epoch_rng);
        if (t > horizon) break;
        const double u = mark_rng.uniform_open_open();
        const bool repeat = u <= static_cast<double>(distinct) / nd;
        if (repeat)
            repeats += 1;
        else
            distinct += 1;
        run.event_times.push_back(t);
        run.accepted.push_back(repeat ? 0 : 1);
        run.distinct.push_back(distinct);
        run.repeats.append(t, static_cast<double>(repeats));
    }
    return run;
}

std::vector<std::int64_t> repeats_recursion(std::size_t k, std::uint64_t n,
                                            const std::vector<double>& uniforms) {
    if (k > uniforms.size())
        throw std::invalid_argument("repeats_recursion: not enough uniforms");
    if (n == 0) throw std::invalid_argument("repeats_recursion: n must be positive");
    const double nd = static_cast<double>(n);
    std::vector<std::int64_t> r(k + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        const double threshold = (static_cast<double>(i - 1) - static_cast<double>(r[i - 1])) / nd;
        r[i] = r[i - 1] + (uniforms[i - 1] <= threshold ? 1 : 0);
    }
    return r;
}

RepeatsBounds repeats_bounds(std::size_t k, std::uint64_t n,
                             const std::vector<double>& uniforms) {
    if (k > uniforms.size())
        throw std::invalid_argument("repeats_bounds: not enough uniforms");
    if (n == 0) throw std::invalid_argument("repeats_bounds: n must be positive");
    const double nd = static_cast<double>(n);
    RepeatsBounds b;
    b.lower.assign(k + 1, 0);
    b.central.assign(k + 1, 0);
    b.upper.assign(k + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        const double u = uniforms[i - 1];
        const double im1 = static_cast<double>(i - 1);
        b.upper[i] = b.upper[i - 1] + (u <= im1 / nd ? 1 : 0);
        b.central[i] =
            b.central[i - 1] +
            (u <= (im1 - static_cast<double>(b.central[i - 1])) / nd ? 1 : 0);
        b.lower[i] =
            b.lower[i - 1] +
            (u <= (im1 - static_cast<double>(b.upper[i - 1])) / nd ? 1 : 0);
    }
    return b;
}

}  // namespace tqsim
