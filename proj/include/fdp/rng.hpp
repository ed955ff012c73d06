#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace fdp {

// Counter-based deterministic randomness. Every random object in the library
// is a pure function of (user seed, stream tag, counters), so results are
// reproducible regardless of iteration order, platform, or thread count.
//
// Derivation: starting from the user seed, each word is folded in with the
// SplitMix64 finalizer. Stream tags keep independent uses (per-edge matchings,
// per-trial experiments, per-element Bernoulli draws, ...) from colliding.

namespace stream {
constexpr std::uint64_t cover_edge = 0x636f7665722d6564ULL;   // per-edge matchings
constexpr std::uint64_t trial = 0x747269616c2d2d2dULL;        // per-trial experiments
constexpr std::uint64_t xi = 0x78692d64726177ULL;             // per-element activation draws
constexpr std::uint64_t calibration = 0x63616c6962726174ULL;  // calibration subprocess runs
constexpr std::uint64_t search = 0x7365617263682d2dULL;       // randomized instance search
}  // namespace stream

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = mix64(seed ^ tag);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

// SplitMix64 stream; small, fast, and identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n) via rejection sampling.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniformly random permutation of [0, k) by Fisher-Yates.
    std::vector<int> permutation(int k) {
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = k - 1; i > 0; --i) {
            const auto j = static_cast<int>(next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        return perm;
    }

private:
    std::uint64_t state_;
};

}  // namespace fdp
