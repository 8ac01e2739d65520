#include "tqsim/queue_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tqsim {

std::vector<double> generate_arrivals(std::uint64_t n, double rate, Pcg64& rng) {
    return generate_arrivals_until(n, rate, std::numeric_limits<double>::infinity(), rng);
}

std::vector<double> generate_arrivals_until(std::uint64_t n, double rate, double horizon,
                                            Pcg64& rng) {
    if (n == 0) throw std::invalid_argument("generate_arrivals: n must be positive");
    if (!(rate > 0.0)) throw std::invalid_argument("generate_arrivals: rate must be positive");
    std::vector<double> times;
    double t = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
        // j-th spacing is exponential with rate (n - j) * rate.
        const double gap =
            sample_exponential(static_cast<double>(n - j) * rate, rng);
        t += gap;
        if (t > horizon) break;
        times.push_back(t);
    }
    return times;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

QueueRun simulate_queue_events(std::vector<double> arrivals,
                               const std::function<double()>& next_service,
                               double mean_service, std::int64_t initial_backlog,
                               double horizon, double idle_refine_dt) {
    if (!(horizon > 0.0)) throw std::invalid_argument("simulate_queue: horizon must be positive");
    if (initial_backlog < 0)
        throw std::invalid_argument("simulate_queue: initial backlog must be non-negative");
    if (!(mean_service > 0.0))
        throw std::invalid_argument("simulate_queue: mean service time must be positive");
    for (std::size_t i = 0; i + 1 < arrivals.size(); ++i)
        if (!(arrivals[i] < arrivals[i + 1]))
            throw std::invalid_argument("simulate_queue: arrival times must be strictly increasing");
    if (!arrivals.empty() && !(arrivals.front() > 0.0))
        throw std::invalid_argument("simulate_queue: arrival times must be positive");

    QueueRun run;
    run.initial_backlog = initial_backlog;
    run.horizon = horizon;
    run.mean_service = mean_service;
    run.arrival_times = std::move(arrivals);

    // Offered work of the backlog is present at time zero.
    double offered_work = 0.0;
    for (std::int64_t i = 0; i < initial_backlog; ++i) {
        run.service_durations.push_back(next_service());
        offered_work += run.service_durations.back();
    }

    std::int64_t q = initial_backlog;
    std::uint64_t arrived = 0;
    double idle = 0.0;
    double t = 0.0;

    std::size_t served = 0;  // index of the job in service
    double next_completion = kInf;
    if (q > 0) next_completion = run.service_durations[served];

    run.A.initial_value = 0.0;
    run.Q.initial_value = static_cast<double>(q);
    run.B.initial_value = 0.0;
    run.I.initial_value = 0.0;
    run.X.initial_value = offered_work;

    const auto record = [&](double te) {
        run.A.append(te, static_cast<double>(arrived));
        run.Q.append(te, static_cast<double>(q));
        run.I.append(te, idle);
        run.B.append(te, te - idle);
        run.X.append(te, offered_work - te);
    };

    while (true) {
        const double ta = arrived < run.arrival_times.size() ? run.arrival_times[arrived] : kInf;
        const double te = std::min(ta, next_completion);
        if (te > horizon) break;

        if (q == 0) idle += te - t;  // one accumulation per idle spell
        t = te;

        // Pre-arrival sample of the net input: work is still flat while
        // time has advanced, which is where the running infimum sits.
        if (ta == te) {
            const double dip = std::nextafter(te, 0.0);
            if (run.X.times.empty() ? dip > 0.0 : dip > run.X.times.back())
                run.X.append(dip, offered_work - dip);
        }

        // Ties break arrival-first.
        if (ta == te) {
            arrived += 1;
            run.service_durations.push_back(next_service());
            offered_work += run.service_durations.back();
            q += 1;
            if (q == 1) {
                served = run.service_durations.size() - 1;
                next_completion = te + run.service_durations[served];
            }
        }
        if (next_completion == te) {
            q -= 1;
            run.completions += 1;
            if (q > 0) {
                served += 1;
                next_completion = te + run.service_durations[served];
            } else {
                next_completion = kInf;
            }
        }
        record(te);
    }

    // Closing sample at the horizon.
    if (run.Q.times.empty() || run.Q.times.back() < horizon) {
        if (q == 0) idle += horizon - t;
        record(horizon);
    }

    run.N = free_process(run, mean_service, idle_refine_dt);
    return run;
}

QueueRun simulate_queue(const QueueConfig& cfg, const SeedSpec& seed) {
    if (cfg.n == 0) throw std::invalid_argument("simulate_queue: n must be positive");
    const double clock_rate =
        cfg.clock_rate > 0.0 ? cfg.clock_rate : cfg.model.lambda / static_cast<double>(cfg.n);

    Pcg64 arr_rng = Pcg64::stream(seed, StreamRole::arrival_clocks);
    Pcg64 svc_rng = Pcg64::stream(seed, StreamRole::service_times);

    std::vector<double> arrivals =
        generate_arrivals_until(cfg.n, clock_rate, cfg.horizon, arr_rng);
    const ServiceModel model = cfg.model;
    return simulate_queue_events(
        std::move(arrivals), [&]() { return sample_pareto(model, svc_rng); }, cfg.model.mean,
        cfg.initial_backlog, cfg.horizon, cfg.idle_refine_dt);
}

StepPath free_process(const QueueRun& run, double mean_service, double idle_refine_dt) {
    const double lam = 1.0 / mean_service;
    StepPath n_path;
    n_path.initial_value = run.Q.initial_value;

    double prev_t = 0.0;
    double prev_idle = run.I.initial_value;
    for (std::size_t i = 0; i < run.Q.times.size(); ++i) {
        const double te = run.Q.times[i];
        const double cur_idle = run.I.values[i];
        if (cur_idle > prev_idle) {
            // The spell started at the previous event and ends here;
            // sample the linear drain, finishing at the left limit.
            if (idle_refine_dt > 0.0) {
                for (double tr = prev_t + idle_refine_dt; tr < te; tr += idle_refine_dt) {
                    const double v = -(prev_idle + (tr - prev_t)) * lam;
                    if (n_path.times.empty() ? tr > 0.0 : tr > n_path.times.back())
                        n_path.append(tr, v);
                    else
                        break;
                }
            }
            const double dip = std::nextafter(te, prev_t);
            if (n_path.times.empty() ? dip > 0.0 : dip > n_path.times.back())
                n_path.append(dip, -(cur_idle * lam));
        }
        n_path.append(te, run.Q.values[i] - cur_idle * lam);
        prev_t = te;
        prev_idle = cur_idle;
    }
    return n_path;
}

StepPath net_input(const QueueRun& run) {
    // Prefix sums of offered work in the same order as the event loop.
    std::vector<double> work_after(run.arrival_times.size() + 1, 0.0);
    double acc = 0.0;
    std::size_t svc = 0;
    for (std::int64_t i = 0; i < run.initial_backlog; ++i) acc += run.service_durations[svc++];
    work_after[0] = acc;
    for (std::size_t j = 0; j < run.arrival_times.size(); ++j) {
        acc += run.service_durations[svc++];
        work_after[j + 1] = acc;
    }

    StepPath x;
    x.initial_value = work_after[0];
    for (std::size_t i = 0; i < run.X.times.size(); ++i) {
        const double t = run.X.times[i];
        const auto it = std::upper_bound(run.arrival_times.begin(), run.arrival_times.end(), t);
        const auto count = static_cast<std::size_t>(it - run.arrival_times.begin());
        x.append(t, work_after[count] - t);
    }
    return x;
}

}  // namespace tqsim
