#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mia::rng {

// Counter-based random source. Every draw is a pure function of
// (seed, stream, index), so any consumer — sequential or parallel — gets the
// same bits for the same logical draw. Streams keep independent random
// quantities (split assignment, correctness, features, ...) from sharing a
// counter sequence.

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

enum class Stream : std::uint64_t {
    Split = 1,     // train/test membership draws
    Correct = 2,   // correctness draws
    Category = 3,  // categorical simulation: category choice
    Feature = 4,   // synthetic dataset coordinates
    Generic = 5,
};

class Counter {
public:
    Counter(std::uint64_t seed, Stream stream)
        : base_(mix(mix(seed + kGamma) + static_cast<std::uint64_t>(stream) * kGamma)) {}

    // index-th output of a splitmix64 sequence anchored at base_
    std::uint64_t word(std::uint64_t index) const { return mix(base_ + (index + 1) * kGamma); }

    // uniform in [0, 1), 53 significant bits
    double uniform(std::uint64_t index) const {
        return static_cast<double>(word(index) >> 11) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; consumes words 2*index and 2*index + 1
    double normal(std::uint64_t index) const {
        const double u1 = static_cast<double>(word(2 * index) >> 11) * 0x1.0p-53 + 0x1.0p-54;
        const double u2 = static_cast<double>(word(2 * index + 1) >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t base_;
};

}  // namespace mia::rng
