#pragma once

// Small independent oracles used to cross-check the library. They are written
// from first principles on purpose and must not call the code paths they
// check: the block-hash oracle enumerates all 4^m error words directly, and
// the code oracle re-derives the [7,4]/[7,3] pair from matrix literals.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sixstate/bell.hpp"
#include "sixstate/rng.hpp"

namespace oracle {

inline double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

/// Exhaustive block-hash rate: enumerate every length-m word over the four
/// error classes, group by the m-1 adjacent bit-flip parities, and keep the
/// first bit of the bit-flip pattern plus the phase parity as the residual
/// uncertainty.
inline double cat_rate_bruteforce(double p, int m) {
    const std::array<double, 4> probs{1.0 - 1.5 * p, 0.5 * p, 0.5 * p, 0.5 * p};
    const std::uint64_t n_words = 1ull << (2 * m);
    const std::uint32_t n_syndromes = 1u << (m - 1);
    // joint[(syndrome, first bit, phase parity)]
    std::vector<double> joint(static_cast<std::size_t>(n_syndromes) * 4, 0.0);

    for (std::uint64_t word = 0; word < n_words; ++word) {
        double prob = 1.0;
        std::uint32_t x = 0;  // bit-flip pattern
        int z_parity = 0;
        for (int i = 0; i < m; ++i) {
            const auto cls = static_cast<std::uint32_t>((word >> (2 * i)) & 3);
            prob *= probs[cls];
            if (cls == 1 || cls == 3) x |= 1u << i;  // bit_flip or both
            if (cls == 2 || cls == 3) z_parity ^= 1;  // phase or both
        }
        if (prob == 0.0) continue;
        const std::uint32_t syndrome = (x ^ (x >> 1)) & (n_syndromes - 1);
        const std::uint32_t first = x & 1u;
        joint[(syndrome * 2 + first) * 2 + z_parity] += prob;
    }

    double h_cond = 0.0;
    for (std::uint32_t s = 0; s < n_syndromes; ++s) {
        const double* w = &joint[static_cast<std::size_t>(s) * 4];
        const double ps = w[0] + w[1] + w[2] + w[3];
        if (ps <= 0.0) continue;
        double h = 0.0;
        for (int i = 0; i < 4; ++i) h += plogp(w[i] / ps);
        h_cond += ps * h;
    }
    return (1.0 - h_cond) / m;
}

/// The [7,4] Hamming code re-derived from its parity-check literals, with a
/// brute-force nearest-codeword decoder and the eight subcode words listed
/// outright.
struct hamming_oracle {
    std::vector<std::uint8_t> codewords;   // all 16, as 7-bit integers (bit j = position j)
    std::array<std::uint8_t, 8> simplex{}; // the subcode

    static std::uint8_t syndrome_of(std::uint8_t word) {
        // Parity rows "0001111", "0110011", "1010101" read left to right,
        // packed with position j at bit j.
        const std::uint8_t h[3] = {0b1111000, 0b1100110, 0b1010101};
        std::uint8_t s = 0;
        for (int i = 0; i < 3; ++i) {
            s |= static_cast<std::uint8_t>((std::popcount(static_cast<unsigned>(word & h[i])) & 1) << i);
        }
        return s;
    }

    hamming_oracle() {
        for (unsigned w = 0; w < 128; ++w) {
            if (syndrome_of(static_cast<std::uint8_t>(w)) == 0) codewords.push_back(static_cast<std::uint8_t>(w));
        }
        // span of {0001111, 0110011, 1010101} as little-endian integers
        const std::uint8_t g[3] = {0b1111000, 0b1100110, 0b1010101};
        for (unsigned mask = 0; mask < 8; ++mask) {
            std::uint8_t word = 0;
            for (int i = 0; i < 3; ++i) {
                if (mask & (1u << i)) word ^= g[i];
            }
            simplex[mask] = word;
        }
    }

    bool in_code(std::uint8_t word) const { return syndrome_of(word) == 0; }

    bool in_simplex(std::uint8_t word) const {
        for (std::uint8_t s : simplex) {
            if (s == word) return true;
        }
        return false;
    }

    /// Nearest codeword by trying all errors of weight 0, then 1.
    struct decode_out {
        std::uint8_t codeword;
        bool ok;
    };
    decode_out decode(std::uint8_t word) const {
        if (in_code(word)) return {word, true};
        for (int j = 0; j < 7; ++j) {
            const auto flipped = static_cast<std::uint8_t>(word ^ (1u << j));
            if (in_code(flipped)) return {flipped, true};
        }
        return {word, false};
    }
};

/// Three-sigma binomial half-width for a frequency estimate.
inline double binom_3sigma(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }

/// Random distribution over the four classes, for property tests.
inline sixstate::bell_diagonal random_state(sixstate::random_stream& rng) {
    double u[4], sum = 0.0;
    do {
        sum = 0.0;
        for (double& x : u) sum += (x = rng.uniform());
    } while (sum <= 0.0);
    return {u[0] / sum, u[1] / sum, u[2] / sum, u[3] / sum};
}

}  // namespace oracle
