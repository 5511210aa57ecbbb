#ifndef SKETCHBAL_RNG_HPP
#define SKETCHBAL_RNG_HPP

#include <cmath>
#include <cstdint>

namespace sketchbal {

// Deterministic random stream used everywhere random draws are needed.
// The generator is xoshiro256++ seeded through splitmix64; Gaussian variates
// come from Box-Muller on the uniform stream. Both mappings are pinned so
// that a (kind, dims, seed) tuple reproduces bit-identical output on any
// platform with IEEE doubles.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        // splitmix64 expansion of the seed into the xoshiro256++ state
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double next_unit_open() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound) via rejection sampling.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    double next_sign() noexcept { return (next_u64() & 1ULL) ? 1.0 : -1.0; }

    /// Standard normal variate (Box-Muller; pairs generated, one cached).
    double next_gaussian() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit_open();
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Per-trial seed derivation: trials draw from independent streams obtained
/// as base_seed * 1000003 + trial_index (wrapping uint64 arithmetic), and
/// within a trial the consumers use fixed offsets on top of that value.
inline std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t trial_index) noexcept {
    return base_seed * 1000003ULL + trial_index;
}

/// Fixed per-trial stream offsets (matrix data first, sketch second, any
/// auxiliary draws such as perturbations third).
inline constexpr std::uint64_t kMatrixStreamOffset = 0;
inline constexpr std::uint64_t kSketchStreamOffset = 1;
inline constexpr std::uint64_t kAuxStreamOffset = 2;

}  // namespace sketchbal

#endif
