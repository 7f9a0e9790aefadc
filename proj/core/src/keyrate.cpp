#include "sixstate/keyrate.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sixstate {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

/// Entropy in bits of an unnormalized non-negative weight vector summing to
/// `total`: sum of -(w/total) log2(w/total).
double entropy_of_weights(const double* w, std::size_t n, double total) {
    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i) h += plogp(w[i] / total);
    return h;
}

}  // namespace

double bb84_worst_case_rate(double p) {
    if (!(p >= 0.0 && p <= 0.5)) {
        throw std::domain_error("bb84_worst_case_rate: p must lie in [0, 1/2], got " + std::to_string(p));
    }
    return 1.0 - 2.0 * binary_entropy(p);
}

double six_state_hashing_rate(double p) {
    return 1.0 - entropy4(from_bit_error_depolarizing(p));
}

subroutine_a_decomposition_result subroutine_a_decomposition(double p) {
    const bell_diagonal s = from_bit_error_depolarizing(p);
    subroutine_a_decomposition_result out{};
    out.h_bit = binary_entropy(p);
    out.h_phase_given_bit = entropy4(s) - out.h_bit;
    out.rate = 1.0 - out.h_bit - out.h_phase_given_bit;
    return out;
}

cat_hash_config::cat_hash_config(int m_in) : m(m_in) {
    if (m < 1 || m > 12) {
        throw std::invalid_argument("cat_hash_config: m must lie in [1, 12], got " + std::to_string(m));
    }
}

double cat_hash_rate(double p, const cat_hash_config& cfg) {
    const bell_diagonal s = from_bit_error_depolarizing(p);
    const double a = s.a();
    const double b = s.b();  // == c == d for this channel
    const int m = cfg.m;
    const std::uint32_t n_patterns = 1u << m;
    const std::uint32_t n_syndromes = 1u << (m - 1);

    // Per block, the side information broadcast is the m-1 adjacent parities
    // of the bit-flip pattern. Conditioned on that syndrome, two bit-flip
    // patterns remain (the pattern and its complement) and the phase
    // information kept is a single parity bit, so at most 4 joint outcomes
    // survive per syndrome. Enumerate the 2^m bit-flip patterns; each
    // contributes its probability, split across phase parities.
    //
    // On a pair whose bit was not flipped the phase flips with probability
    // b/(a+b); on a flipped pair it is exactly 1/2 (the bit_flip and both
    // classes are equally likely). The parity of independent bits with flip
    // probabilities q_i is odd with probability (1 - prod(1-2q_i))/2, and
    // 1-2q is (a-b)/(a+b) on an unflipped pair and 0 on a flipped one.
    std::vector<double> weights(static_cast<std::size_t>(n_syndromes) * 4, 0.0);
    const double p_keep = a + b;          // P(bit not flipped)
    const double p_flip = 2.0 * b;        // P(bit flipped)
    const double keep_factor = (a - b) / (a + b);

    for (std::uint32_t x = 0; x < n_patterns; ++x) {
        double prob = 1.0;
        double parity_factor = 1.0;
        for (int i = 0; i < m; ++i) {
            if ((x >> i) & 1u) {
                prob *= p_flip;
                parity_factor = 0.0;
            } else {
                prob *= p_keep;
                parity_factor *= keep_factor;
            }
        }
        if (prob == 0.0) continue;
        const std::uint32_t syndrome = (x ^ (x >> 1)) & (n_syndromes - 1);
        const std::uint32_t rep = x & 1u;  // pattern vs complement, resolved by the first bit
        const double odd = 0.5 * (1.0 - parity_factor);
        weights[(syndrome * 2 + rep) * 2 + 0] += prob * (1.0 - odd);
        weights[(syndrome * 2 + rep) * 2 + 1] += prob * odd;
    }

    double h_given_syndrome = 0.0;
    for (std::uint32_t sdx = 0; sdx < n_syndromes; ++sdx) {
        const double* w = &weights[static_cast<std::size_t>(sdx) * 4];
        const double ps = w[0] + w[1] + w[2] + w[3];
        if (ps > 0.0) h_given_syndrome += ps * entropy_of_weights(w, 4, ps);
    }
    return (1.0 - h_given_syndrome) / static_cast<double>(m);
}

double threshold(const std::function<double(double)>& rate_fn, double p_lo, double p_hi, double tol) {
    if (!(p_lo < p_hi)) throw std::invalid_argument("threshold: bracket must satisfy p_lo < p_hi");
    if (!(tol >= 1e-10)) throw std::invalid_argument("threshold: tol must be at least 1e-10");
    double f_lo = rate_fn(p_lo);
    double f_hi = rate_fn(p_hi);
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        throw std::invalid_argument(
            "threshold: bracket does not straddle the root: rate(" + std::to_string(p_lo) + ") = " + std::to_string(f_lo) +
            ", rate(" + std::to_string(p_hi) + ") = " + std::to_string(f_hi));
    }
    for (int iter = 0; iter < 200 && (p_hi - p_lo) > tol; ++iter) {
        const double mid = 0.5 * (p_lo + p_hi);
        if (rate_fn(mid) > 0.0) {
            p_lo = mid;
        } else {
            p_hi = mid;
        }
    }
    return 0.5 * (p_lo + p_hi);
}

cat_threshold_result best_cat_threshold(int m_min, int m_max, double tol) {
    if (m_min < 1 || m_max > 12 || m_min > m_max) {
        throw std::invalid_argument("best_cat_threshold: need 1 <= m_min <= m_max <= 12");
    }
    cat_threshold_result best{0.0, 0};
    for (int m = m_min; m <= m_max; ++m) {
        const cat_hash_config cfg(m);
        auto fn = [&cfg](double p) { return cat_hash_rate(p, cfg); };
        const double p_star = threshold(fn, 0.05, 0.2, tol);
        if (p_star > best.p_star) best = {p_star, m};
    }
    return best;
}

rate_curve_table rate_curve(const std::function<double(double)>& rate_fn, const std::vector<double>& grid) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
            throw std::invalid_argument("rate_curve: grid must be strictly increasing (violated at index " + std::to_string(i) + ")");
        }
    }
    rate_curve_table out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            out.push_back({grid[i], rate_fn(grid[i])});
        } catch (const std::domain_error& e) {
            throw std::invalid_argument("rate_curve: grid index " + std::to_string(i) + " (p = " + std::to_string(grid[i]) +
                                        ") outside the rate function's domain: " + e.what());
        }
    }
    return out;
}

}  // namespace sixstate
