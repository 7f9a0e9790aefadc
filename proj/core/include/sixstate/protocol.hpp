#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sixstate/bell.hpp"
#include "sixstate/codes.hpp"
#include "sixstate/gf2.hpp"
#include "sixstate/rng.hpp"

namespace sixstate {

enum class basis : std::uint8_t { x = 0, y = 1, z = 2 };

const char* to_string(basis b);

/// Which bases the two parties draw from, and how.
///   bb84:              X and Z, each with probability 1/2
///   six_state:         X, Y and Z, each with probability 1/3
///   six_state_biased:  Z with probability 1-2*eps, X and Y with eps each
enum class scheme : std::uint8_t { bb84, six_state, six_state_biased };

const char* to_string(scheme s);

struct channel_config {
    enum class kind : std::uint8_t {
        depolarizing,      ///< parameter = bit error probability p in [0, 2/3]
        intercept_resend,  ///< parameter = interception fraction q in [0, 1]
    };
    kind which = kind::depolarizing;
    double parameter = 0.0;
};

struct protocol_config {
    scheme which_scheme = scheme::six_state;
    std::uint64_t n_pulses = 0;
    double epsilon = 0.0;  ///< biased scheme only; must be 0 otherwise
    channel_config channel;
    double check_fraction = 0.5;
    /// Abort bound on the observed check errors; exactly one must be set.
    /// The rate form is converted to a count as floor(rate * check_count).
    std::optional<std::uint64_t> e_max_count;
    std::optional<double> e_max_rate;
    std::uint64_t min_check_per_basis = 200;
    std::string css_preset = "steane74";
    double confidence = 1e-3;  ///< two-sided failure bound for the sampling margin
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument naming the offending field. In the
    /// biased scheme this includes requiring n_pulses * epsilon^2 to exceed
    /// min_check_per_basis, without which the rare bases cannot be checked.
    void validate() const;

    /// Bases the scheme draws from.
    std::vector<basis> basis_set() const;
};

/// One transmitted pulse, carried through the whole pipeline.
struct pulse_record {
    std::uint8_t alice_bit = 0;
    basis alice_basis = basis::z;
    bool eve_intercepted = false;
    basis eve_basis = basis::z;   ///< meaningful only if eve_intercepted
    std::uint8_t eve_bit = 0;     ///< meaningful only if eve_intercepted
    error_class channel_flip = error_class::none;
    basis bob_basis = basis::z;
    std::uint8_t bob_bit = 0;     ///< defined only once `measured` is set
    bool measured = false;
    enum class role : std::uint8_t { unassigned, check, key } assigned = role::unassigned;
};

/// Applies the channel to one pulse: either samples a Pauli error class
/// (depolarizing) or lets an eavesdropper measure and resend in a random
/// basis from the scheme's set (intercept-resend).
void apply_channel(pulse_record& rec, const channel_config& cfg, std::span<const basis> scheme_bases, random_stream& rng);

/// Bob's measurement. Matching bases reproduce the sent bit (flipped iff the
/// error class flips bits); mismatched bases give a uniform bit.
void measure(pulse_record& rec, random_stream& rng);

/// Indices of pulses where both parties chose the same basis, in order.
std::vector<std::size_t> sift(const std::vector<pulse_record>& records);

struct error_estimate {
    std::map<basis, double> per_basis_rates;          ///< only bases meeting min_check_per_basis
    std::map<basis, std::uint64_t> per_basis_counts;  ///< check pulses per basis
    std::map<basis, std::uint64_t> per_basis_errors;
    std::uint64_t check_count = 0;
    std::uint64_t error_count = 0;
    double pooled_rate = 0.0;
    double sampling_margin = 0.0;  ///< Hoeffding bound at the configured confidence
};

/// Compares the two bits on every check pulse. The sampling margin is
/// sqrt(ln(2/confidence) / (2 * check_count)).
error_estimate estimate_errors(const std::vector<pulse_record>& records, std::span<const std::size_t> check_indices,
                               std::uint64_t min_check_per_basis, double confidence);

struct sim_report {
    scheme which_scheme = scheme::six_state;
    std::uint64_t sifted_count = 0;
    std::uint64_t check_count = 0;
    std::map<basis, double> per_basis_error_rates;
    std::map<basis, std::uint64_t> per_basis_check_counts;
    double pooled_error_rate = 0.0;
    double confidence_delta = 0.0;
    bool aborted = false;
    std::string abort_reason;  ///< empty when not aborted
    bit_vec key_alice;         ///< empty when aborted
    bit_vec key_bob;
    bool key_match = false;
    std::uint64_t key_block_count = 0;
    bool insufficient_key_material = false;
    std::uint64_t seed_echo = 0;
    std::string rng_algorithm;
};

/// Runs the full prepare-measure-sift-check-extract pipeline. Deterministic
/// given the config (all randomness flows from rng_seed through fixed
/// per-purpose streams). An abort is a valid outcome, not an error.
sim_report run(const protocol_config& cfg);

/// Same, but also hands back the per-pulse records (with roles assigned)
/// for inspection.
sim_report run(const protocol_config& cfg, std::vector<pulse_record>& out_records);

/// Empirical class counts before and after a random relabeling trit is
/// applied to each sampled pair: trit k applies the cyclic relabeling k
/// times, so the after-counts follow six_state_symmetrize of the input.
struct twirl_trace {
    std::array<std::uint64_t, 4> before{};
    std::array<std::uint64_t, 4> after{};
    std::uint64_t n_pairs = 0;
};

twirl_trace epp_twirl_trace(const bell_diagonal& s, std::uint64_t n_pairs, std::uint64_t seed);

/// Same, with the trits supplied by the caller (class sampling still uses
/// the seed). trits values must lie in {0, 1, 2}.
twirl_trace epp_twirl_trace(const bell_diagonal& s, std::span<const std::uint8_t> trits, std::uint64_t seed);

}  // namespace sixstate
