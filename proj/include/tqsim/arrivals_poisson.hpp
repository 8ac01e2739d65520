#pragma once

// Thinned marked-Poisson representation of the pool arrival process.
//
// Epochs arrive as a homogeneous Poisson process with rate n *
// clock_rate (one exponential clock per pool member, superposed). Each
// epoch carries a uniform mark on {1..n}; an epoch whose mark was seen
// before is discarded. Mark bookkeeping is done without storing marks:
// after i epochs with d distinct marks seen, epoch i+1 repeats with
// probability d / n.
//
// The repeat counter admits a self-contained recursion on the epoch
// index driven by the same uniforms ("repeats" below), together with a
// pathwise upper/lower sandwich sharing those uniforms. Indicator
// convention throughout: an indicator fires iff u <= threshold, with
// sampled uniforms strictly inside (0, 1), so a zero threshold never
// fires on sampled input.

#include <cstdint>
#include <vector>

#include "tqsim/paths.hpp"
#include "tqsim/rng.hpp"

namespace tqsim {

struct MarkedPoissonRun {
    std::vector<double> event_times;     // Poisson epochs on [0, horizon]
    std::vector<std::uint8_t> accepted;  // per epoch
    std::vector<std::int64_t> distinct;  // distinct marks after each epoch
    StepPath repeats;                    // running count of discarded epochs
    std::uint64_t n = 0;
    double horizon = 0.0;

    std::int64_t accepted_count() const;
    // Counting path of accepted epochs: epochs minus repeats.
    StepPath arrivals_path() const;
};

MarkedPoissonRun simulate_marked_poisson(std::uint64_t n, double clock_rate, double horizon,
                                         const SeedSpec& seed);

// Repeat-counter recursion on the epoch index: r(0) = 0 and
// r(i) = r(i-1) + [u_i <= (i - 1 - r(i-1)) / n]. Returns r(0..k).
std::vector<std::int64_t> repeats_recursion(std::size_t k, std::uint64_t n,
                                            const std::vector<double>& uniforms);

struct RepeatsBounds {
    std::vector<std::int64_t> lower;    // thresholds (i-1-upper(i-1))/n
    std::vector<std::int64_t> central;  // the recursion itself
    std::vector<std::int64_t> upper;    // thresholds (i-1)/n
};

// All three recursions driven by the same uniforms; lower <= central <=
// upper holds at every index, deterministically.
RepeatsBounds repeats_bounds(std::size_t k, std::uint64_t n, const std::vector<double>& uniforms);

}  // namespace tqsim
