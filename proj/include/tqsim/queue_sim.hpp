#pragma once

// Event-driven simulation of the single-server queue with a finite
// customer pool. Each of the n pool members joins once, after an
// exponential clock; an initial backlog may already be waiting at time
// zero. Service is FCFS and work-conserving.
//
// Conventions:
//  - clock_rate is the rate of one customer's clock. The pooled arrival
//    intensity at time zero is n * clock_rate; criticality corresponds
//    to clock_rate = lambda / n with lambda = 1 / E[S].
//  - All recorded processes share one event grid (arrivals, service
//    completions, and the horizon). The net input X and the free
//    process N additionally carry samples just before arrivals (and a
//    user-set refinement grid during idle spells) so that their running
//    infima at event times match the continuous-time paths they sample.
//  - The net input counts the work of the initial backlog as present at
//    time zero: X(t) = sum of the first backlog + A(t) service times,
//    minus t. With that convention, regulator(X) reproduces the
//    cumulative idle time for every initial backlog.

#include <cstdint>
#include <functional>
#include <vector>

#include "tqsim/distributions.hpp"
#include "tqsim/paths.hpp"
#include "tqsim/rng.hpp"

namespace tqsim {

struct QueueRun {
    // Inputs actually consumed.
    std::vector<double> arrival_times;      // arrivals that occurred, sorted
    std::vector<double> service_durations;  // per customer, backlog first
    std::int64_t initial_backlog = 0;
    double horizon = 0.0;
    double mean_service = 0.0;

    // Recorded processes. A, Q, B, I share the event grid; X and N add
    // pre-arrival / idle samples.
    StepPath A;  // arrivals counted so far
    StepPath Q;  // queue length (including the customer in service)
    StepPath B;  // cumulative busy time, sampled at events
    StepPath I;  // cumulative idle time, sampled at events
    StepPath X;  // net input: offered work minus elapsed time
    StepPath N;  // free process: Q during service, draining at rate 1/E[S] when idle

    std::uint64_t completions = 0;
};

struct QueueConfig {
    ServiceModel model;
    std::uint64_t n = 0;
    std::int64_t initial_backlog = 0;
    double horizon = 0.0;          // unscaled time
    double clock_rate = 0.0;       // 0 selects the critical rate model.lambda / n
    double idle_refine_dt = 0.0;   // 0 keeps only the pre-arrival samples
};

// Order statistics of n exponential clocks with the given rate, built
// by the cumulative-spacings recursion in O(n) without sorting.
std::vector<double> generate_arrivals(std::uint64_t n, double rate, Pcg64& rng);

// Same recursion, stopped at the first time beyond `horizon` (which is
// not returned). A prefix of generate_arrivals in distribution and in
// the stream draws consumed.
std::vector<double> generate_arrivals_until(std::uint64_t n, double rate, double horizon,
                                            Pcg64& rng);

// Core event loop on explicit inputs; `next_service` is called once per
// customer in FCFS order (backlog first).
QueueRun simulate_queue_events(std::vector<double> arrivals,
                               const std::function<double()>& next_service,
                               double mean_service, std::int64_t initial_backlog,
                               double horizon, double idle_refine_dt = 0.0);

QueueRun simulate_queue(const QueueConfig& cfg, const SeedSpec& seed);

// Recomputes the free process from the recorded Q and I paths:
// N(t) = Q(t) - I(t) / mean_service, with pre-arrival samples at the
// bottom of each idle spell (plus an optional refinement grid).
StepPath free_process(const QueueRun& run, double mean_service, double idle_refine_dt = 0.0);

// Recomputes the net input from arrivals and service durations on the
// same sample times as run.X.
StepPath net_input(const QueueRun& run);

}  // namespace tqsim
