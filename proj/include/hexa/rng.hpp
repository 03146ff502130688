#pragma once

#include <cstdint>

namespace hexa {

// SplitMix64 (Vigna / Steele et al.): state advances by the golden-ratio
// increment 0x9E3779B97F4A7C15 and each output is the finalizer-mixed state.
// Splitting seeds an independent child stream from the parent's next output.
// All suite randomness flows through this generator, so a run is fully
// determined by its seed and reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next()); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    float uniform_pm1() { return static_cast<float>(2.0 * uniform() - 1.0); }

    /// Uniform integer in [0, bound). Modulo bias is irrelevant at suite sizes.
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

} // namespace hexa
