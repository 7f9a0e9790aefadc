#pragma once

#include <functional>
#include <vector>

#include "sixstate/bell.hpp"

namespace sixstate {

struct rate_point {
    double p;
    double rate;
};

/// Sampled (error probability, rate) table.
using rate_curve_table = std::vector<rate_point>;

/// Worst-case one-way rate when only the bit-flip and phase marginals are
/// known and each equals p: 1 - 2 H(p). Defined for p in [0, 1/2].
double bb84_worst_case_rate(double p);

/// One-way hashing rate of the depolarizing-symmetrized state with bit error
/// p: 1 - H4(1 - 3p/2, p/2, p/2, p/2). Defined for p in [0, 2/3].
double six_state_hashing_rate(double p);

struct subroutine_a_decomposition_result {
    double h_bit;           ///< cost of reconciling the bit-flip pattern
    double h_phase_given_bit;  ///< remaining cost of the phase pattern
    double rate;            ///< 1 - h_bit - h_phase_given_bit
};

/// Two-stage reconciliation accounting for the depolarizing state: first the
/// bit-flip pattern at H(p) per pair, then the phase pattern at its
/// conditional entropy. The total matches six_state_hashing_rate exactly.
subroutine_a_decomposition_result subroutine_a_decomposition(double p);

/// Block length for the concatenated repetition ("cat") hashing rate.
struct cat_hash_config {
    explicit cat_hash_config(int m_in);
    int m;  ///< qubits per block, 1 <= m <= 12
};

/// Rate per qubit of hashing m-qubit blocks of the depolarizing state where
/// the m-1 adjacent bit-flip parities are reconciled first and only a
/// single bit of phase information (the phase parity of the block) is kept.
/// m = 1 reduces to six_state_hashing_rate.
double cat_hash_rate(double p, const cat_hash_config& cfg);

/// Root of rate_fn on [p_lo, p_hi] by bisection; rate_fn must be positive at
/// p_lo and negative at p_hi. Deterministic; the result is within tol of the
/// crossing, so brackets of the same root agree to within 2*tol.
double threshold(const std::function<double(double)>& rate_fn, double p_lo, double p_hi, double tol);

struct cat_threshold_result {
    double p_star;  ///< largest threshold across block lengths
    int m;          ///< block length attaining it
};

/// Thresholds of cat_hash_rate for every m in [m_min, m_max], keeping the
/// best. Each per-m threshold is found by bisection to tolerance tol.
cat_threshold_result best_cat_threshold(int m_min, int m_max, double tol);

/// Evaluates rate_fn on a strictly increasing grid. A domain violation is
/// reported together with the offending grid index.
rate_curve_table rate_curve(const std::function<double(double)>& rate_fn, const std::vector<double>& grid);

}  // namespace sixstate
