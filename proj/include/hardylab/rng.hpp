#pragma once

#include <cstdint>

namespace hardylab {

// Counter-based uniform generator built on the splitmix64 finalizer.
//
// Every draw is a pure function of (seed, counter), so a Monte Carlo run is
// bit-identical for a fixed (seed, samples) pair no matter how the counter
// range is partitioned across workers or chunks. Not cryptographic.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ull * (counter + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // in [0, 1)
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform01(counter);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

// Stable seed for a derived sub-stream (inner loops, per-chunk workers).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed ^ (0xD2B74407B1CE6E93ull * (tag + 0x632BE59BD9B4E019ull));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace hardylab
