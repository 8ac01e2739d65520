#pragma once

// Seeded random number streams for reproducible parallel Monte Carlo.
//
// Every replication draws from its own PCG64 stream, derived from a
// (master_seed, replication_index) pair plus a role tag so that e.g.
// arrival clocks and service times never share a stream. Identical
// SeedSpec values reproduce identical output bit for bit, independent
// of platform and thread scheduling.

#include <cstdint>

namespace tqsim {

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t replication_index = 0;
};

// Distinct sub-streams of one replication.
enum class StreamRole : std::uint64_t {
    generic = 0,
    arrival_clocks = 1,
    service_times = 2,
    poisson_epochs = 3,
    thinning_uniforms = 4,
    stable_increments = 5,
};

// 64-bit mixer used for seed derivation (splitmix64).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// PCG64 (XSL-RR 128/64). Streams are selected through the odd LCG
// increment, so replications advance through disjoint sequences.
class Pcg64 {
  public:
    using result_type = std::uint64_t;

    Pcg64(std::uint64_t seed_hi, std::uint64_t seed_lo,
          std::uint64_t seq_hi, std::uint64_t seq_lo) {
        state_ = 0;
        inc_ = ((to128(seq_hi, seq_lo)) << 1) | 1u;
        step();
        state_ += to128(seed_hi, seed_lo);
        step();
    }

    static Pcg64 stream(const SeedSpec& s, StreamRole role) {
        std::uint64_t a = mix64(s.master_seed);
        std::uint64_t b = mix64(a ^ mix64(s.replication_index + 0x632be59bd9b4e019ULL));
        std::uint64_t c = mix64(b ^ mix64(static_cast<std::uint64_t>(role) + 0xd1b54a32d192ed03ULL));
        std::uint64_t d = mix64(c);
        return Pcg64(a ^ d, b, c, d | 1u);
    }

    std::uint64_t next() {
        step();
        const std::uint64_t xored = static_cast<std::uint64_t>(state_ >> 64) ^
                                    static_cast<std::uint64_t>(state_);
        const unsigned rot = static_cast<unsigned>(state_ >> 122);
        return (xored >> rot) | (xored << ((-rot) & 63u));
    }

    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

    // Uniform on (0, 1]: never returns 0, so -log(u) is always finite.
    double uniform_open_closed() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on (0, 1): strictly interior, so comparisons against a
    // zero threshold never fire.
    double uniform_open_open() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    using u128 = unsigned __int128;

    static u128 to128(std::uint64_t hi, std::uint64_t lo) {
        return (static_cast<u128>(hi) << 64) | lo;
    }

    void step() {
        // Default PCG 128-bit LCG multiplier.
        constexpr u128 mult = (static_cast<u128>(2549297995355413924ULL) << 64) |
                              4865540595714422341ULL;
        state_ = state_ * mult + inc_;
    }

    u128 state_ = 0;
    u128 inc_ = 1;
};

}  // namespace tqsim
