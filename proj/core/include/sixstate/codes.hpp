#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sixstate/gf2.hpp"
#include "sixstate/rng.hpp"

namespace sixstate {

/// Syndrome of v under parity-check matrix h: the product h·v.
bit_vec syndrome(const binary_matrix& h, const bit_vec& v);

/// Binary [n, k] linear code given by a full-row-rank generator matrix.
/// The parity check is derived at construction, along with a minimum-weight
/// syndrome decoding table covering all errors up to the code's guaranteed
/// correction radius t.
class linear_code {
  public:
    explicit linear_code(binary_matrix generator);

    /// Reads the plain-text format: a header line "n k" followed by k rows
    /// of n characters from {0, 1}.
    static linear_code load(std::istream& in);
    static linear_code load_file(const std::string& path);

    std::size_t block_length() const { return generator_.cols(); }  ///< n
    std::size_t dimension() const { return generator_.rows(); }     ///< k

    const binary_matrix& generator() const { return generator_; }
    const binary_matrix& parity_check() const { return parity_check_; }

    /// Largest w such that every error of weight <= w is corrected.
    std::size_t correctable_weight() const { return correctable_weight_; }

    bool contains(const bit_vec& word) const;

    /// message (k bits) -> codeword (n bits).
    bit_vec encode(const bit_vec& message) const;

    struct decode_result {
        bit_vec codeword;
        bool correctable;  ///< false if the syndrome matched no stored error
    };

    /// Bounded-distance decoding: strip the minimum-weight error whose
    /// syndrome matches. Exact for all errors of weight <= correctable_weight().
    decode_result bounded_distance_decode(const bit_vec& word) const;

  private:
    binary_matrix generator_;
    binary_matrix parity_check_;
    std::unordered_map<std::uint64_t, bit_vec> coset_leaders_;
    std::size_t correctable_weight_ = 0;

    std::uint64_t syndrome_key(const bit_vec& word) const;
    void build_decoding_table();
};

/// Nested pair code ⊃ subcode used for key extraction: the key of a codeword
/// is which coset of the subcode it lies in. Labels are assigned
/// deterministically from echelonized bases; they are linear and invariant
/// under adding subcode words.
class css_pair {
  public:
    css_pair(linear_code code, linear_code subcode);

    /// The [7,4] Hamming / [7,3] simplex pair: one key bit per 7-bit block,
    /// every weight-1 error corrected, and a large subcode absorbing
    /// degeneracy.
    static css_pair steane_preset();

    const linear_code& code() const { return code_; }
    const linear_code& subcode() const { return subcode_; }

    std::size_t block_length() const { return code_.block_length(); }
    std::size_t key_length() const { return code_.dimension() - subcode_.dimension(); }

    /// Coset label of a codeword of code(); throws if the word is outside.
    bit_vec coset_label(const bit_vec& codeword) const;

    /// Uniformly random codeword of code().
    bit_vec random_codeword(random_stream& rng) const;

    struct key_extract_result {
        bit_vec key;
        bool ok;  ///< false if decoding failed; key is then all zeros
    };

    /// Receiver-side key extraction. The sender holds a random codeword u
    /// and announces u + v, where v is the sender's raw block; the receiver
    /// holds v + e. Their sum u + e is decoded back to a codeword whose
    /// coset label is the key; it matches the sender's coset_label(u)
    /// whenever the error is within the code's correction radius.
    key_extract_result coset_key_extract(const bit_vec& announced, const bit_vec& received) const;

  private:
    linear_code code_;
    linear_code subcode_;
    // Echelonized subcode basis and coset transversal, stored as (pivot, row).
    std::vector<std::pair<std::size_t, bit_vec>> subcode_basis_;
    std::vector<std::pair<std::size_t, bit_vec>> transversal_;
};

/// Preset pair registry; currently only "steane74". Unknown names are
/// rejected with the list of known presets.
css_pair make_css_preset(const std::string& name);

/// Parity rows and observed parities from hashing a fixed pattern with
/// `rounds` uniformly random vectors.
struct parity_hash {
    binary_matrix rows;
    bit_vec parities;
};

parity_hash random_parity_hash(const bit_vec& pattern, std::size_t rounds, std::uint64_t seed);

struct ml_decode_result {
    bit_vec pattern;
    bool unique;  ///< true only when a single maximum-prior pattern is consistent
};

/// Most-likely pattern consistent with the observed parities under an i.i.d.
/// prior with per-bit probability prior_p, searching patterns of weight up
/// to max_weight. unique is false when no consistent pattern exists, when
/// the best prior is tied, or when there are no parity constraints at all.
/// The search space (sum of binomials) is capped at 2^24 candidates.
ml_decode_result ml_hash_decode(const binary_matrix& parity_rows, const bit_vec& parities, double prior_p,
                                std::size_t max_weight);

}  // namespace sixstate
