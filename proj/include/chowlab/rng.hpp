#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace chowlab {

// All randomness in the library flows from one explicit 64-bit master seed.
// Independent streams are derived with derive_seed(master, stream); the
// derivation rule below is part of the reproducibility contract, so results
// are bit-identical across platforms and across parallel schedules.

inline constexpr std::uint64_t kSeedGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master + kSeedGamma * (stream + 1));
}

// xoshiro256** with splitmix64 state expansion. Distribution helpers are
// hand-rolled (no std::*_distribution) so streams are identical on every
// standard library implementation.
class Xoshiro {
public:
    explicit Xoshiro(std::uint64_t seed) {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += kSeedGamma;
            word = mix64(z);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform on [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform on (0,1]
    double uniform_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // standard normal via Box-Muller (one value per pair of draws)
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        // Lemire-style rejection, fixed algorithm for reproducibility.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> state_;
};

}  // namespace chowlab
