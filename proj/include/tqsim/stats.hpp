#pragma once

// Statistical machinery for the acceptance checks: exact two-sample
// Kolmogorov-Smirnov distance, a quadrature oracle for the stable
// marginal CDF, and the convergence reports that drive the comparison
// pipelines. Reports embed every seed needed to reproduce them.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tqsim/distributions.hpp"

namespace tqsim {

struct KsResult {
    double statistic = 0.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

// Exact sup-distance between the empirical CDFs via a merge scan.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// CDF of the project's unit stable law S(alpha, 1, 1; 1), alpha in
// (1, 2), by numerical inversion of the characteristic function
// (Gil-Pelaez). Absolute error well below 1e-6 for |x| <= 20; throws
// if the quadrature fails to converge.
double stable_cdf(double alpha, double x);

// Inverse of stable_cdf by bisection.
double stable_quantile(double alpha, double p);

// ---------------------------------------------------------------------------
// Drift convergence: the scaled repeated-marks counter against the
// parabola (lambda^2 / 2) t^2, reported for the thinning recursion and
// its coupled upper/lower bounds.

struct DriftReportConfig {
    std::vector<double> alphas{1.5};
    std::vector<std::uint64_t> n_values{1000, 10000, 100000, 1000000};
    double horizon = 1.0;  // scaled time
    std::uint64_t reps = 200;
    std::uint64_t master_seed = 0;
    double x_m = 1.0;
    unsigned workers = 1;
};

struct DriftEntry {
    double alpha = 0.0;
    std::uint64_t n = 0;
    std::uint64_t cell_seed = 0;  // master seed of this (alpha, n) cell
    double median_central = 0.0;
    double median_upper = 0.0;
    double median_lower = 0.0;
    double q25_central = 0.0;
    double q75_central = 0.0;
};

struct DriftReport {
    DriftReportConfig config;
    std::vector<DriftEntry> entries;
};

DriftReport drift_convergence_report(const DriftReportConfig& cfg);

// Sup over [0, horizon] of |space_factor * counts - (lambda^2/2) t^2|
// for a counting sequence observed at the given epochs (scaled time =
// epoch / time_factor). Exact: evaluated at both ends of every flat
// piece.
double drift_sup_statistic(const std::vector<double>& epochs,
                           const std::vector<std::int64_t>& counts, double time_factor,
                           double space_factor, double lambda, double horizon);

// ---------------------------------------------------------------------------
// Queue-vs-limit marginal comparison (fixed-time KS).

struct QueueLimitConfig {
    double alpha = 1.5;
    std::vector<std::uint64_t> n_values{100000};
    std::vector<double> t_checkpoints{0.5, 1.0};
    std::uint64_t reps = 2000;  // per side
    std::uint64_t master_seed = 0;
    double x_m = 1.0;
    double q0 = 1.0;
    double dt = 1e-3;   // limit grid step
    double ell1 = 0.0;  // 0 selects default_ell1 for the service model
    unsigned workers = 1;
};

struct CheckpointKs {
    double t = 0.0;
    double statistic = 0.0;
};

struct QueueLimitEntry {
    std::uint64_t n = 0;
    std::uint64_t prelimit_seed = 0;
    std::uint64_t limit_seed = 0;
    std::vector<CheckpointKs> checkpoints;
};

struct QueueLimitReport {
    QueueLimitConfig config;
    double ell1_used = 0.0;
    std::vector<QueueLimitEntry> entries;
};

QueueLimitReport queue_limit_comparison(const QueueLimitConfig& cfg);

// ---------------------------------------------------------------------------
// Busy-period comparison: first passage of the free process through 0,
// prelimit (scaled) against the limit, censored at the horizon on both
// sides.

struct BusyPeriodConfig {
    double alpha = 1.5;
    std::uint64_t n = 100000;
    double q0 = 1.0;
    double x_m = 1.0;
    double horizon = 20.0;  // scaled time
    double dt = 1e-3;
    std::uint64_t reps = 2000;  // per side
    std::uint64_t master_seed = 0;
    double ell1 = 0.0;
    unsigned workers = 1;
};

struct BusyPeriodReport {
    BusyPeriodConfig config;
    double ell1_used = 0.0;
    std::uint64_t prelimit_seed = 0;
    std::uint64_t limit_seed = 0;
    std::vector<double> prelimit_samples;
    std::vector<double> limit_samples;
    std::uint64_t prelimit_censored = 0;
    std::uint64_t limit_censored = 0;
    KsResult ks;
};

BusyPeriodReport busy_period_comparison(const BusyPeriodConfig& cfg);

// ---------------------------------------------------------------------------

// Deterministic sub-seed derivation for report cells.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag_a, std::uint64_t tag_b);

// Runs fn(i) for i in [0, count) on up to `workers` threads. Results
// must be written to per-index slots; the partition is deterministic.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

double median_of(std::vector<double> v);
double quantile_of(std::vector<double> v, double p);

// JSON / CSV renderings (reports are written as both).
std::string to_json(const DriftReport& r);
std::string to_json(const QueueLimitReport& r);
std::string to_json(const BusyPeriodReport& r);
std::string to_csv(const DriftReport& r);
std::string to_csv(const QueueLimitReport& r);

}  // namespace tqsim
