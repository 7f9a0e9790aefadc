#include "sixstate/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sixstate {

namespace {

// Stream indices for deriving per-purpose seeds from the master seed.
// Adding a consumer must append a new index, never renumber: existing
// configurations would otherwise replay differently.
enum stream_id : std::uint64_t {
    stream_alice_bits = 0,
    stream_alice_bases = 1,
    stream_bob_bases = 2,
    stream_channel = 3,
    stream_measurement = 4,
    stream_permutation = 5,
    stream_codewords = 6,
    stream_twirl_classes = 7,
    stream_twirl_trits = 8,
};

basis draw_basis(scheme s, double epsilon, random_stream& rng) {
    const double u = rng.uniform();
    switch (s) {
        case scheme::bb84:
            return u < 0.5 ? basis::x : basis::z;
        case scheme::six_state:
            return u < 1.0 / 3.0 ? basis::x : u < 2.0 / 3.0 ? basis::y : basis::z;
        case scheme::six_state_biased:
            return u < epsilon ? basis::x : u < 2.0 * epsilon ? basis::y : basis::z;
    }
    throw std::logic_error("draw_basis: unknown scheme");
}

bool flips_bit(error_class k) { return k == error_class::bit_flip || k == error_class::both; }

}  // namespace

const char* to_string(basis b) {
    switch (b) {
        case basis::x:
            return "X";
        case basis::y:
            return "Y";
        case basis::z:
            return "Z";
    }
    return "?";
}

const char* to_string(scheme s) {
    switch (s) {
        case scheme::bb84:
            return "bb84";
        case scheme::six_state:
            return "six_state";
        case scheme::six_state_biased:
            return "six_state_biased";
    }
    return "?";
}

std::vector<basis> protocol_config::basis_set() const {
    if (which_scheme == scheme::bb84) return {basis::x, basis::z};
    return {basis::x, basis::y, basis::z};
}

void protocol_config::validate() const {
    if (n_pulses < 1) throw std::invalid_argument("n_pulses: must be at least 1");
    if (!(check_fraction > 0.0 && check_fraction < 1.0)) {
        throw std::invalid_argument("check_fraction: must lie strictly between 0 and 1");
    }
    switch (channel.which) {
        case channel_config::kind::depolarizing:
            if (!(channel.parameter >= 0.0 && channel.parameter <= 2.0 / 3.0)) {
                throw std::invalid_argument("channel.p: depolarizing bit error probability must lie in [0, 2/3]");
            }
            break;
        case channel_config::kind::intercept_resend:
            if (!(channel.parameter >= 0.0 && channel.parameter <= 1.0)) {
                throw std::invalid_argument("channel.q: interception fraction must lie in [0, 1]");
            }
            break;
    }
    if (e_max_count.has_value() == e_max_rate.has_value()) {
        throw std::invalid_argument("e_max_count/e_max_rate: exactly one abort bound must be set");
    }
    if (e_max_rate && !(*e_max_rate >= 0.0 && *e_max_rate <= 1.0)) {
        throw std::invalid_argument("e_max_rate: must lie in [0, 1]");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("confidence: must lie strictly between 0 and 1");
    }
    if (which_scheme == scheme::six_state_biased) {
        if (!(epsilon > 0.0 && epsilon < 0.5)) {
            throw std::invalid_argument("epsilon: biased scheme requires 0 < epsilon < 1/2 (epsilon = 0 leaves two bases unmonitored and is insecure)");
        }
        const double expected_rare = static_cast<double>(n_pulses) * epsilon * epsilon;
        if (!(expected_rare > static_cast<double>(min_check_per_basis))) {
            throw std::invalid_argument(
                "epsilon: biased scheme requires n_pulses * epsilon^2 > min_check_per_basis (got " +
                std::to_string(expected_rare) + " <= " + std::to_string(min_check_per_basis) +
                "); the rare bases would not accumulate a usable error sample");
        }
    } else if (epsilon != 0.0) {
        throw std::invalid_argument("epsilon: only meaningful for the six_state_biased scheme; set it to 0");
    }
    make_css_preset(css_preset);  // throws for unknown names
}

void apply_channel(pulse_record& rec, const channel_config& cfg, std::span<const basis> scheme_bases, random_stream& rng) {
    switch (cfg.which) {
        case channel_config::kind::depolarizing: {
            rec.channel_flip = sample_error_class(from_bit_error_depolarizing(cfg.parameter), rng.uniform());
            return;
        }
        case channel_config::kind::intercept_resend: {
            rec.channel_flip = error_class::none;
            rec.eve_intercepted = rng.uniform() < cfg.parameter;
            if (!rec.eve_intercepted) return;
            rec.eve_basis = scheme_bases[rng.below(scheme_bases.size())];
            // Matching bases read the bit faithfully; otherwise the outcome
            // is uniform, and the resent pulse carries it.
            rec.eve_bit = rec.eve_basis == rec.alice_basis ? rec.alice_bit : static_cast<std::uint8_t>(rng.next_bit());
            return;
        }
    }
    throw std::logic_error("apply_channel: unknown channel kind");
}

void measure(pulse_record& rec, random_stream& rng) {
    const basis arrival_basis = rec.eve_intercepted ? rec.eve_basis : rec.alice_basis;
    const std::uint8_t arrival_bit = rec.eve_intercepted ? rec.eve_bit : rec.alice_bit;
    if (rec.bob_basis == arrival_basis) {
        rec.bob_bit = arrival_bit ^ static_cast<std::uint8_t>(flips_bit(rec.channel_flip));
    } else {
        rec.bob_bit = static_cast<std::uint8_t>(rng.next_bit());
    }
    rec.measured = true;
}

std::vector<std::size_t> sift(const std::vector<pulse_record>& records) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].measured && records[i].alice_basis == records[i].bob_basis) kept.push_back(i);
    }
    return kept;
}

error_estimate estimate_errors(const std::vector<pulse_record>& records, std::span<const std::size_t> check_indices,
                               std::uint64_t min_check_per_basis, double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("estimate_errors: confidence must lie strictly between 0 and 1");
    }
    error_estimate est;
    est.check_count = check_indices.size();
    for (std::size_t i : check_indices) {
        const pulse_record& rec = records.at(i);
        est.per_basis_counts[rec.alice_basis] += 1;
        if (rec.alice_bit != rec.bob_bit) {
            est.per_basis_errors[rec.alice_basis] += 1;
            est.error_count += 1;
        }
    }
    for (const auto& [b, count] : est.per_basis_counts) {
        if (count >= min_check_per_basis && count > 0) {
            est.per_basis_rates[b] = static_cast<double>(est.per_basis_errors[b]) / static_cast<double>(count);
        }
    }
    if (est.check_count > 0) {
        est.pooled_rate = static_cast<double>(est.error_count) / static_cast<double>(est.check_count);
        est.sampling_margin = std::sqrt(std::log(2.0 / confidence) / (2.0 * static_cast<double>(est.check_count)));
    }
    return est;
}

sim_report run(const protocol_config& cfg) {
    std::vector<pulse_record> records;
    return run(cfg, records);
}

sim_report run(const protocol_config& cfg, std::vector<pulse_record>& records) {
    cfg.validate();

    random_stream alice_bits(derive_stream_seed(cfg.rng_seed, stream_alice_bits));
    random_stream alice_bases(derive_stream_seed(cfg.rng_seed, stream_alice_bases));
    random_stream bob_bases(derive_stream_seed(cfg.rng_seed, stream_bob_bases));
    random_stream channel_rng(derive_stream_seed(cfg.rng_seed, stream_channel));
    random_stream measurement_rng(derive_stream_seed(cfg.rng_seed, stream_measurement));
    random_stream permutation_rng(derive_stream_seed(cfg.rng_seed, stream_permutation));
    random_stream codeword_rng(derive_stream_seed(cfg.rng_seed, stream_codewords));

    const std::vector<basis> bases = cfg.basis_set();
    const double eps = cfg.epsilon;

    records.assign(cfg.n_pulses, pulse_record{});
    for (pulse_record& rec : records) {
        rec.alice_bit = static_cast<std::uint8_t>(alice_bits.next_bit());
        rec.alice_basis = draw_basis(cfg.which_scheme, eps, alice_bases);
        rec.bob_basis = draw_basis(cfg.which_scheme, eps, bob_bases);
        apply_channel(rec, cfg.channel, bases, channel_rng);
        measure(rec, measurement_rng);
    }

    std::vector<std::size_t> sifted = sift(records);

    // Random permutation, then an exact check_fraction split of the sifted
    // positions: the check sample is a uniformly random subset.
    for (std::size_t i = sifted.size(); i > 1; --i) {
        std::swap(sifted[i - 1], sifted[permutation_rng.below(i)]);
    }
    const auto n_check = static_cast<std::size_t>(
        std::llround(cfg.check_fraction * static_cast<double>(sifted.size())));
    const std::span<const std::size_t> check_span(sifted.data(), n_check);
    for (std::size_t i = 0; i < sifted.size(); ++i) {
        records[sifted[i]].assigned = i < n_check ? pulse_record::role::check : pulse_record::role::key;
    }

    sim_report report;
    report.which_scheme = cfg.which_scheme;
    report.sifted_count = sifted.size();
    report.check_count = n_check;
    report.seed_echo = cfg.rng_seed;
    report.rng_algorithm = rng_algorithm_name;

    if (n_check == 0) {
        report.aborted = true;
        report.abort_reason = "no check pulses: the sifted sample is too small to estimate errors";
        return report;
    }

    const error_estimate est = estimate_errors(records, check_span, cfg.min_check_per_basis, cfg.confidence);
    report.per_basis_error_rates = est.per_basis_rates;
    report.per_basis_check_counts = est.per_basis_counts;
    report.pooled_error_rate = est.pooled_rate;
    report.confidence_delta = est.sampling_margin;

    const std::uint64_t e_max = cfg.e_max_count
                                    ? *cfg.e_max_count
                                    : static_cast<std::uint64_t>(std::floor(*cfg.e_max_rate * static_cast<double>(n_check)));

    if (cfg.which_scheme == scheme::six_state_biased) {
        // Refined analysis: every basis must be separately well-sampled and
        // separately below the bound.
        const double e_max_as_rate = static_cast<double>(e_max) / static_cast<double>(n_check);
        for (basis b : bases) {
            const auto count_it = est.per_basis_counts.find(b);
            const std::uint64_t count = count_it == est.per_basis_counts.end() ? 0 : count_it->second;
            if (count < cfg.min_check_per_basis) {
                report.aborted = true;
                report.abort_reason = std::string("insufficient check sample in basis ") + to_string(b) + ": " +
                                      std::to_string(count) + " < " + std::to_string(cfg.min_check_per_basis);
                return report;
            }
            const auto err_it = est.per_basis_errors.find(b);
            const std::uint64_t errs = err_it == est.per_basis_errors.end() ? 0 : err_it->second;
            const double rate = count == 0 ? 0.0 : static_cast<double>(errs) / static_cast<double>(count);
            if (rate > e_max_as_rate) {
                report.aborted = true;
                report.abort_reason = std::string("error rate in basis ") + to_string(b) + " exceeds the bound: " +
                                      std::to_string(rate) + " > " + std::to_string(e_max_as_rate);
                return report;
            }
        }
    }

    if (est.error_count > e_max) {
        report.aborted = true;
        report.abort_reason = "check errors exceed the bound: " + std::to_string(est.error_count) + " > " +
                              std::to_string(e_max);
        return report;
    }

    // Key extraction over the remaining positions, block by block.
    const css_pair pair = make_css_preset(cfg.css_preset);
    const std::size_t block = pair.block_length();
    const std::size_t n_key_positions = sifted.size() - n_check;
    report.key_block_count = n_key_positions / block;
    if (report.key_block_count == 0) {
        report.insufficient_key_material = true;
        return report;
    }

    report.key_alice = bit_vec(report.key_block_count * pair.key_length());
    report.key_bob = bit_vec(report.key_block_count * pair.key_length());
    bool all_blocks_ok = true;
    for (std::size_t blk = 0; blk < report.key_block_count; ++blk) {
        bit_vec alice_block(block), bob_block(block);
        for (std::size_t j = 0; j < block; ++j) {
            const pulse_record& rec = records[sifted[n_check + blk * block + j]];
            alice_block.set(j, rec.alice_bit != 0);
            bob_block.set(j, rec.bob_bit != 0);
        }
        const bit_vec u = pair.random_codeword(codeword_rng);
        const bit_vec announced = u ^ alice_block;
        const bit_vec alice_key = pair.coset_label(u);
        const css_pair::key_extract_result bob_key = pair.coset_key_extract(announced, bob_block);
        all_blocks_ok = all_blocks_ok && bob_key.ok;
        for (std::size_t j = 0; j < pair.key_length(); ++j) {
            report.key_alice.set(blk * pair.key_length() + j, alice_key.get(j));
            report.key_bob.set(blk * pair.key_length() + j, bob_key.key.get(j));
        }
    }
    report.key_match = all_blocks_ok && report.key_alice == report.key_bob;
    return report;
}

twirl_trace epp_twirl_trace(const bell_diagonal& s, std::uint64_t n_pairs, std::uint64_t seed) {
    if (n_pairs == 0) throw std::invalid_argument("epp_twirl_trace: n_pairs must be at least 1");
    random_stream trit_rng(derive_stream_seed(seed, stream_twirl_trits));
    std::vector<std::uint8_t> trits(n_pairs);
    for (std::uint8_t& t : trits) t = static_cast<std::uint8_t>(trit_rng.below(3));
    return epp_twirl_trace(s, trits, seed);
}

twirl_trace epp_twirl_trace(const bell_diagonal& s, std::span<const std::uint8_t> trits, std::uint64_t seed) {
    if (trits.empty()) throw std::invalid_argument("epp_twirl_trace: need at least one pair");
    random_stream class_rng(derive_stream_seed(seed, stream_twirl_classes));
    twirl_trace trace;
    trace.n_pairs = trits.size();
    for (std::uint8_t trit : trits) {
        if (trit > 2) throw std::invalid_argument("epp_twirl_trace: trits must lie in {0, 1, 2}");
        const error_class before = sample_error_class(s, class_rng.uniform());
        const twirl_op op = trit == 0 ? twirl_op::identity : trit == 1 ? twirl_op::t : twirl_op::t_squared;
        const error_class after = apply(op, before);
        trace.before[static_cast<std::size_t>(before)] += 1;
        trace.after[static_cast<std::size_t>(after)] += 1;
    }
    return trace;
}

}  // namespace sixstate
