#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sixstate/gf2.hpp"
#include "sixstate/rng.hpp"

namespace sixstate {

/// Pauli error class acting on one pair: the qubit either arrives intact,
/// with its bit flipped, with its phase flipped, or with both.
enum class error_class : std::uint8_t { none = 0, bit_flip = 1, phase = 2, both = 3 };

/// Probability distribution over the four error classes, in the fixed slot
/// order (none, bit_flip, phase, both). Entries are non-negative and sum
/// to one; the constructor renormalizes sums that are off by at most 1e-9
/// and rejects anything worse.
class bell_diagonal {
  public:
    bell_diagonal(double a, double b, double c, double d);

    double a() const { return p_[0]; }  ///< no error
    double b() const { return p_[1]; }  ///< bit flip only
    double c() const { return p_[2]; }  ///< phase flip only
    double d() const { return p_[3]; }  ///< both

    const std::array<double, 4>& probs() const { return p_; }
    double prob(error_class k) const { return p_[static_cast<std::size_t>(k)]; }

  private:
    std::array<double, 4> p_;
};

/// Channel that flips the bit with probability p, split evenly between the
/// pure bit-flip and combined classes; the phase-only class gets the same
/// share as each of those. Valid for p in [0, 2/3].
bell_diagonal from_bit_error_depolarizing(double p);

/// Exchange of the bit-flip and phase slots: (a,b,c,d) -> (a,c,b,d).
/// An involution.
bell_diagonal hadamard_conjugate(const bell_diagonal& s);

/// Average of the identity and hadamard_conjugate: equalizes the bit-flip
/// and phase slots. Idempotent.
bell_diagonal bb84_symmetrize(const bell_diagonal& s);

/// Cyclic relabeling of the three error slots: the bit-flip slot receives
/// the old phase mass, the phase slot the old combined mass, and the
/// combined slot the old bit-flip mass. Applying it three times is the
/// identity.
bell_diagonal t_conjugate(const bell_diagonal& s);

/// Average over the identity, t_conjugate and its square: equalizes all
/// three error slots to (b+c+d)/3. Idempotent.
bell_diagonal six_state_symmetrize(const bell_diagonal& s);

/// Shannon entropy of the four-class distribution, in bits (0 log 0 = 0).
double entropy4(const bell_diagonal& s);

/// Binary entropy H(p) in bits, defined on [0, 1].
double binary_entropy(double p);

struct marginal_info {
    double h_bit;    ///< entropy of the bit-flip indicator, H(b+d)
    double h_phase;  ///< entropy of the phase indicator, H(c+d)
    double mutual;   ///< mutual information between the two indicators
};

/// Entropies of the bit-flip / phase-flip indicator bits and their mutual
/// information. entropy4 == h_bit + h_phase - mutual always holds.
marginal_info marginals_and_mutual_info(const bell_diagonal& s);

/// One sampled error class given a uniform draw u in [0,1). Thresholds are
/// cumulative in the order (none, phase, bit_flip, both), so the bit-flip
/// indicator {bit_flip, both} occupies the top of the unit interval and is
/// monotone in the channel's error probability under common random numbers.
error_class sample_error_class(const bell_diagonal& s, double u);

/// Error pattern across n independent pairs. bit_flips marks pairs whose
/// bit was flipped, phase_flips pairs whose phase was flipped; a pair hit
/// by the combined class appears in both.
struct pauli_pattern {
    bit_vec bit_flips;
    bit_vec phase_flips;
};

/// Samples n i.i.d. error classes from s. The seed is taken explicitly so
/// parallel callers can use disjoint seeds.
pauli_pattern sample_pattern(const bell_diagonal& s, std::size_t n, std::uint64_t seed);

/// The symmetrization operations form two small groups: {identity, hadamard}
/// and {identity, t, t_squared}.
enum class twirl_op : std::uint8_t { identity = 0, hadamard = 1, t = 2, t_squared = 3 };

/// Composition a then b. Defined within each group; mixing hadamard with
/// t/t_squared leaves both groups and is rejected.
twirl_op compose(twirl_op a, twirl_op b);

twirl_op inverse(twirl_op op);

bell_diagonal apply(twirl_op op, const bell_diagonal& s);

/// The class relabeling induced by op. Its push-forward on distributions
/// equals apply(op, s).
error_class apply(twirl_op op, error_class k);

}  // namespace sixstate
