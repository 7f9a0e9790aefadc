#include "sixstate/codes.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace sixstate {

namespace {

// Search/table construction stays below this many candidates per step.
constexpr std::uint64_t enumeration_cap = 1ull << 24;

/// C(n, w), saturating at cap + 1.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t w, std::uint64_t cap) {
    if (w > n) return 0;
    w = std::min(w, n - w);
    std::uint64_t res = 1;
    for (std::uint64_t i = 1; i <= w; ++i) {
        res = res * (n - w + i) / i;
        if (res > cap) return cap + 1;
    }
    return res;
}

/// Iterates the weight-w subsets of {0, ..., n-1} in lexicographic order.
class combination_iter {
  public:
    combination_iter(std::size_t n, std::size_t w) : n_(n), idx_(w) {
        for (std::size_t i = 0; i < w; ++i) idx_[i] = i;
        done_ = w > n;
    }

    bool done() const { return done_; }
    const std::vector<std::size_t>& indices() const { return idx_; }

    void advance() {
        if (idx_.empty()) {
            done_ = true;  // the single weight-0 subset
            return;
        }
        std::size_t i = idx_.size();
        while (i > 0) {
            --i;
            if (idx_[i] + (idx_.size() - i) < n_) {
                ++idx_[i];
                for (std::size_t j = i + 1; j < idx_.size(); ++j) idx_[j] = idx_[j - 1] + 1;
                return;
            }
        }
        done_ = true;
    }

  private:
    std::size_t n_;
    std::vector<std::size_t> idx_;
    bool done_ = false;
};

}  // namespace

bit_vec syndrome(const binary_matrix& h, const bit_vec& v) { return h.multiply(v); }

linear_code::linear_code(binary_matrix generator) : generator_(std::move(generator)), parity_check_(0, 1) {
    const std::size_t n = generator_.cols();
    const std::size_t k = generator_.rows();
    if (k == 0) throw std::invalid_argument("linear_code: generator must have at least one row");
    if (n > 64) throw std::invalid_argument("linear_code: block lengths above 64 are not supported");
    if (gf2_rank(generator_) != k) throw std::invalid_argument("linear_code: generator rows are linearly dependent");
    parity_check_ = null_space(generator_);
    build_decoding_table();
}

linear_code linear_code::load(std::istream& in) {
    std::size_t n = 0, k = 0;
    if (!(in >> n >> k)) throw std::invalid_argument("linear_code::load: malformed header, expected \"n k\"");
    if (n < 1 || k < 1 || k > n) {
        throw std::invalid_argument("linear_code::load: header requires 1 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    }
    std::vector<bit_vec> rows;
    rows.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        std::string row;
        if (!(in >> row)) throw std::invalid_argument("linear_code::load: expected " + std::to_string(k) + " generator rows, got " + std::to_string(r));
        if (row.size() != n) {
            throw std::invalid_argument("linear_code::load: row " + std::to_string(r) + " has length " + std::to_string(row.size()) +
                                        ", expected " + std::to_string(n));
        }
        rows.push_back(bit_vec::from_string(row));
    }
    return linear_code(binary_matrix::from_rows(std::move(rows)));
}

linear_code linear_code::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("linear_code::load_file: cannot open " + path);
    return load(in);
}

bool linear_code::contains(const bit_vec& word) const {
    if (word.size() != block_length()) throw std::invalid_argument("linear_code::contains: word length != block length");
    if (parity_check_.rows() == 0) return true;
    return parity_check_.multiply(word).is_zero();
}

bit_vec linear_code::encode(const bit_vec& message) const {
    if (message.size() != dimension()) throw std::invalid_argument("linear_code::encode: message length != dimension");
    bit_vec out(block_length());
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (message.get(i)) out ^= generator_.row(i);
    }
    return out;
}

std::uint64_t linear_code::syndrome_key(const bit_vec& word) const {
    if (parity_check_.rows() == 0) return 0;
    const bit_vec s = parity_check_.multiply(word);
    return s.words().empty() ? 0 : s.words()[0];
}

void linear_code::build_decoding_table() {
    const std::size_t n = block_length();
    const std::size_t r = parity_check_.rows();
    const std::uint64_t n_syndromes = 1ull << r;  // r <= 63 since k >= 1

    // Column syndromes let every error syndrome be XOR-accumulated.
    std::vector<std::uint64_t> col_syndrome(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < r; ++i) s |= static_cast<std::uint64_t>(parity_check_.get(i, j)) << i;
        col_syndrome[j] = s;
    }

    coset_leaders_.clear();
    coset_leaders_.emplace(0, bit_vec(n));
    correctable_weight_ = 0;

    // Grow the table one weight level at a time; a level is committed only if
    // every one of its syndromes is new, so the stored radius is exact.
    for (std::size_t w = 1; w <= n; ++w) {
        if (coset_leaders_.size() == n_syndromes) break;
        if (binom_capped(n, w, enumeration_cap) > enumeration_cap) break;
        if (coset_leaders_.size() + binom_capped(n, w, enumeration_cap) > enumeration_cap) break;

        std::unordered_map<std::uint64_t, bit_vec> level;
        bool collision = false;
        for (combination_iter it(n, w); !it.done() && !collision; it.advance()) {
            std::uint64_t s = 0;
            for (std::size_t j : it.indices()) s ^= col_syndrome[j];
            if (coset_leaders_.contains(s) || level.contains(s)) {
                collision = true;
                break;
            }
            bit_vec e(n);
            for (std::size_t j : it.indices()) e.set(j, true);
            level.emplace(s, std::move(e));
        }
        if (collision) break;
        coset_leaders_.merge(level);
        correctable_weight_ = w;
    }
}

linear_code::decode_result linear_code::bounded_distance_decode(const bit_vec& word) const {
    if (word.size() != block_length()) throw std::invalid_argument("linear_code::bounded_distance_decode: word length != block length");
    const auto it = coset_leaders_.find(syndrome_key(word));
    if (it == coset_leaders_.end()) return {word, false};
    return {word ^ it->second, true};
}

css_pair::css_pair(linear_code code, linear_code subcode) : code_(std::move(code)), subcode_(std::move(subcode)) {
    if (code_.block_length() != subcode_.block_length()) {
        throw std::invalid_argument("css_pair: codes have different block lengths");
    }
    if (code_.dimension() <= subcode_.dimension()) {
        throw std::invalid_argument("css_pair: the subcode must have strictly smaller dimension");
    }
    for (std::size_t r = 0; r < subcode_.dimension(); ++r) {
        if (!code_.contains(subcode_.generator().row(r))) {
            throw std::invalid_argument("css_pair: subcode generator row " + std::to_string(r) + " is not a codeword of the code");
        }
    }

    const echelon_form sub = row_reduce(subcode_.generator());
    for (std::size_t i = 0; i < sub.pivots.size(); ++i) subcode_basis_.emplace_back(sub.pivots[i], sub.matrix.row(i));

    // Extend the subcode basis to a basis of the full code; the extension
    // rows form the coset transversal. Keeping them reduced against the
    // subcode basis and against each other makes label extraction a plain
    // pivot read-off.
    for (std::size_t r = 0; r < code_.dimension(); ++r) {
        bit_vec cand = code_.generator().row(r);
        for (const auto& [pivot, row] : subcode_basis_) {
            if (cand.get(pivot)) cand ^= row;
        }
        for (const auto& [pivot, row] : transversal_) {
            if (cand.get(pivot)) cand ^= row;
        }
        if (cand.is_zero()) continue;
        std::size_t lead = 0;
        while (!cand.get(lead)) ++lead;
        for (auto& [pivot, row] : transversal_) {
            if (row.get(lead)) row ^= cand;
        }
        transversal_.emplace_back(lead, std::move(cand));
    }
    std::sort(transversal_.begin(), transversal_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (transversal_.size() != key_length()) {
        throw std::logic_error("css_pair: transversal size does not match key length");
    }
}

css_pair css_pair::steane_preset() {
    linear_code hamming(binary_matrix::from_strings({
        "1110000",
        "1001100",
        "0101010",
        "1101001",
    }));
    linear_code simplex(binary_matrix::from_strings({
        "0001111",
        "0110011",
        "1010101",
    }));
    return css_pair(std::move(hamming), std::move(simplex));
}

css_pair make_css_preset(const std::string& name) {
    if (name == "steane74") return css_pair::steane_preset();
    throw std::invalid_argument("make_css_preset: unknown preset \"" + name + "\" (known: steane74)");
}

bit_vec css_pair::coset_label(const bit_vec& codeword) const {
    if (!code_.contains(codeword)) throw std::invalid_argument("css_pair::coset_label: word is not a codeword of the code");
    bit_vec w = codeword;
    for (const auto& [pivot, row] : subcode_basis_) {
        if (w.get(pivot)) w ^= row;
    }
    bit_vec label(key_length());
    for (std::size_t i = 0; i < transversal_.size(); ++i) {
        if (w.get(transversal_[i].first)) {
            label.set(i, true);
            w ^= transversal_[i].second;
        }
    }
    if (!w.is_zero()) throw std::logic_error("css_pair::coset_label: elimination failed to terminate at zero");
    return label;
}

bit_vec css_pair::random_codeword(random_stream& rng) const {
    bit_vec message(code_.dimension());
    for (std::size_t i = 0; i < message.size(); ++i) message.set(i, rng.next_bit());
    return code_.encode(message);
}

css_pair::key_extract_result css_pair::coset_key_extract(const bit_vec& announced, const bit_vec& received) const {
    const bit_vec masked = announced ^ received;  // = codeword + channel error
    const linear_code::decode_result dec = code_.bounded_distance_decode(masked);
    if (!dec.correctable) return {bit_vec(key_length()), false};
    return {coset_label(dec.codeword), true};
}

parity_hash random_parity_hash(const bit_vec& pattern, std::size_t rounds, std::uint64_t seed) {
    if (pattern.size() == 0) throw std::invalid_argument("random_parity_hash: pattern must be non-empty");
    if (rounds == 0) throw std::invalid_argument("random_parity_hash: need at least one round");
    random_stream rng(seed);
    std::vector<bit_vec> rows;
    rows.reserve(rounds);
    for (std::size_t r = 0; r < rounds; ++r) {
        bit_vec row(pattern.size());
        for (std::size_t i = 0; i < pattern.size(); ++i) row.set(i, rng.next_bit());
        rows.push_back(std::move(row));
    }
    parity_hash out{binary_matrix::from_rows(std::move(rows)), bit_vec(rounds)};
    out.parities = out.rows.multiply(pattern);
    return out;
}

ml_decode_result ml_hash_decode(const binary_matrix& parity_rows, const bit_vec& parities, double prior_p,
                                std::size_t max_weight) {
    const std::size_t n = parity_rows.cols();
    const std::size_t rounds = parity_rows.rows();
    if (parities.size() != rounds) throw std::invalid_argument("ml_hash_decode: parity count != number of rows");
    if (!(prior_p >= 0.0 && prior_p <= 1.0)) throw std::invalid_argument("ml_hash_decode: prior_p must lie in [0, 1]");
    if (rounds == 0) return {bit_vec(n), false};  // every pattern is consistent

    const std::size_t w_cap = std::min(max_weight, n);
    std::uint64_t total = 0;
    for (std::size_t w = 0; w <= w_cap; ++w) {
        total += binom_capped(n, w, enumeration_cap);
        if (total > enumeration_cap) {
            throw std::invalid_argument("ml_hash_decode: search space exceeds 2^24 candidates; lower max_weight");
        }
    }

    // The prior of a weight-w pattern depends only on w, so "most likely"
    // reduces to a weight preference: smallest weight for prior_p < 1/2,
    // largest for prior_p > 1/2, and a flat prior at exactly 1/2.
    const int direction = prior_p < 0.5 ? +1 : prior_p > 0.5 ? -1 : 0;

    bit_vec candidate(n);
    std::vector<std::size_t> prev_indices;
    bool found = false;
    bit_vec best;
    int n_consistent_at_best = 0;   // saturates at 2
    int n_consistent_overall = 0;   // saturates at 2; only needed when direction == 0

    auto scan_level = [&](std::size_t w) {
        for (combination_iter it(n, w); !it.done(); it.advance()) {
            for (std::size_t j : prev_indices) candidate.set(j, false);
            prev_indices = it.indices();
            for (std::size_t j : prev_indices) candidate.set(j, true);

            bool consistent = true;
            for (std::size_t r = 0; r < rounds && consistent; ++r) {
                consistent = parity_rows.row(r).dot(candidate) == parities.get(r);
            }
            if (!consistent) continue;
            if (!found) {
                found = true;
                best = candidate;
                n_consistent_at_best = 1;
            } else if (candidate.weight() == best.weight()) {
                n_consistent_at_best = std::min(n_consistent_at_best + 1, 2);
            }
            n_consistent_overall = std::min(n_consistent_overall + 1, 2);
            if (direction != 0 && n_consistent_at_best >= 2) return;  // tie settled
            if (direction == 0 && n_consistent_overall >= 2) return;
        }
    };

    if (direction >= 0) {
        for (std::size_t w = 0; w <= w_cap; ++w) {
            scan_level(w);
            if (direction > 0 && found) break;  // lower weight already beats the rest
            if (direction == 0 && n_consistent_overall >= 2) break;
        }
    } else {
        for (std::size_t w = w_cap + 1; w-- > 0;) {
            scan_level(w);
            if (found) break;
        }
    }

    if (!found) return {bit_vec(n), false};
    const bool unique = direction == 0 ? n_consistent_overall == 1 : n_consistent_at_best == 1;
    if (unique && !(parity_rows.multiply(best) == parities)) {
        throw std::logic_error("ml_hash_decode: unique result fails to reproduce the observed parities");
    }
    return {best, unique};
}

}  // namespace sixstate
