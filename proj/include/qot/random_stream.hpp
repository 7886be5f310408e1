#pragma once

#include <cstdint>

namespace qot {

// Default seed used by the CLI and the verification battery.
inline constexpr std::uint64_t kDefaultSeed = 42;

// Counter-based deterministic random stream.
//
// The n-th draw is a pure function of (seed, n), so equal seeds give
// bit-identical sequences, and child streams can be split off without
// consuming or sharing state. Splitting uses a different output function
// than drawing, so lane-derived seeds do not collide with draw outputs.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t draws() const noexcept { return counter_; }

    // Next 64 random bits; advances the counter by one.
    std::uint64_t next_u64() noexcept;

    // Uniform double in [0, 1), 53 random bits. One draw.
    double next_unit() noexcept;

    // True with probability p. Consumes exactly one draw, also for p = 0
    // and p = 1 (keeps draw accounting independent of the probability).
    bool bernoulli(double p) noexcept { return next_unit() < p; }

    // Child stream for the given lane. Pure in (seed, lane); does not
    // consume a draw and is unaffected by draws made so far.
    RandomStream split(std::uint64_t lane) const noexcept;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace qot
