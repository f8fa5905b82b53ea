#pragma once

#include <cstdint>
#include <string_view>

namespace hsnet {

// Deterministic RNG used throughout the generators, couplers and attack
// engine. The raw stream is splitmix64; the bounded-integer and real draws
// are implemented by hand because the std distributions are free to differ
// between standard libraries, which would break replayability of seeds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // splitmix64, Steele et al.; full 64-bit period, trivially portable
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_index(std::uint64_t bound) {
        // rejection sampling, bias-free and stable across platforms
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

private:
    std::uint64_t state_;
};

/// Mixes a base seed with a stream tag and an index so that independent
/// pipeline stages (hw generation, sw generation, coupling, attack) never
/// share draws. Replica r of an experiment uses base_seed + r as its base.
std::uint64_t derive_seed(std::uint64_t base, std::string_view stream, std::uint64_t index = 0);

}  // namespace hsnet
