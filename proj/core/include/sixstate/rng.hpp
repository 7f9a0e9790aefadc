#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace sixstate {

/// Name of the generator scheme, echoed in simulation reports so results can
/// be tied to the exact pseudo-random pipeline that produced them.
inline constexpr const char* rng_algorithm_name = "splitmix64-derived mt19937_64";

/// One splitmix64 step. Used only to spread a master seed into well-separated
/// per-stream seeds; the streams themselves are mt19937_64.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Seed for child stream `index` of a master seed. Distinct indices give
/// statistically independent streams, so consumers of one stream can be
/// added or removed without disturbing the others.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t s = master ^ (0x5851f42d4c957f2dull * (index + 1));
    std::uint64_t out = 0;
    // A few rounds wash out low-entropy masters (0, 1, ...) completely.
    for (int i = 0; i < 3; ++i) out = splitmix64_next(s);
    return out;
}

/// A deterministic random stream. Doubles are built from the top 53 bits of
/// the raw engine output rather than std::uniform_real_distribution, so the
/// produced sequence is identical across standard library implementations.
class random_stream {
  public:
    explicit random_stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    std::uint64_t next_bit() { return engine_() >> 63; }

    /// Unbiased uniform integer in [0, n) via rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("random_stream::below: n must be positive");
        // Accepting r >= 2^64 mod n leaves a range whose length is a multiple
        // of n, so the residue is exactly uniform.
        const std::uint64_t threshold = (-n) % n;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r < threshold);
        return r % n;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace sixstate
