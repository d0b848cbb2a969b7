#pragma once

#include <cstdint>
#include <initializer_list>

namespace vtsim {

/// SplitMix64 finalizer. Used both for seed expansion and for deriving
/// independent substream seeds from (seed, tag...) tuples, so that results
/// never depend on std::hash or on platform word size.
constexpr std::uint64_t split_mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return split_mix64(a ^ split_mix64(b));
}

/// Folds any number of tags into a base seed. derive_seed(s, a, b) and
/// derive_seed(derive_seed(s, a), b) agree by construction.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t h = base;
    for (std::uint64_t t : tags) h = mix_seed(h, t);
    return h;
}

template <class... Tags>
constexpr std::uint64_t derive_seed(std::uint64_t base, Tags... tags) {
    return derive_seed(base, {static_cast<std::uint64_t>(tags)...});
}

/// xoshiro256++ stream seeded via SplitMix64 expansion. Deterministic across
/// platforms; uniform doubles are built from the high 53 bits so sequences do
/// not depend on the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z = split_mix64(z);
            word = z;
            z ^= 0xd1342543de82ef95ull;
        }
    }

    std::uint64_t next_u64() {
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
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi). Returns lo when the interval is empty.
    double uniform(double lo, double hi) {
        if (!(lo < hi)) return lo;
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_index(std::uint64_t n) {
        // Multiply-shift rejection-free mapping; bias is < 2^-53 for the
        // sample counts used here.
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)) % n;
    }

    /// Independent substream keyed by tags; does not advance this stream.
    Rng fork(std::initializer_list<std::uint64_t> tags) const {
        std::uint64_t h = state_[0] ^ rotl(state_[3], 17);
        for (std::uint64_t t : tags) h = mix_seed(h, t);
        return Rng(h);
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace vtsim
