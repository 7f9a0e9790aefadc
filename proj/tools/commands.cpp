#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "sixstate/bell.hpp"
#include "sixstate/keyrate.hpp"
#include "sixstate/protocol.hpp"
#include "sixstate/protocol_json.hpp"

namespace sixstate::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// 12 significant digits: enough to reproduce every double we print for
/// plotting purposes, short enough to keep the CSV readable.
std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

constexpr const char* class_names[4] = {"none", "bit_flip", "phase", "both"};

ordered_json counts_json(const std::array<std::uint64_t, 4>& counts) {
    ordered_json out = ordered_json::object();
    for (std::size_t k = 0; k < 4; ++k) out[class_names[k]] = counts[k];
    return out;
}

}  // namespace

std::string rates_csv(double p_min, double p_max, int steps, const std::vector<int>& cat_ms) {
    if (!(p_min >= 0.0 && p_min < p_max && p_max <= 0.2)) {
        throw std::invalid_argument("rates: need 0 <= p-min < p-max <= 0.2");
    }
    if (steps < 2) throw std::invalid_argument("rates: need at least 2 steps");

    std::vector<cat_hash_config> cat_cfgs;
    cat_cfgs.reserve(cat_ms.size());
    for (int m : cat_ms) cat_cfgs.emplace_back(m);  // validates the range

    std::string out = "p,bb84,bb84_raw,six_state,six_state_raw";
    for (const cat_hash_config& cfg : cat_cfgs) {
        const std::string name = "cat_m" + std::to_string(cfg.m);
        out += "," + name + "," + name + "_raw";
    }
    out += "\n";

    auto clamp = [](double r) { return std::max(r, 0.0); };
    for (int i = 0; i < steps; ++i) {
        const double p = i == steps - 1 ? p_max : p_min + (p_max - p_min) * i / (steps - 1);
        out += format_number(p);
        const double bb84 = bb84_worst_case_rate(p);
        const double six = six_state_hashing_rate(p);
        out += "," + format_number(clamp(bb84)) + "," + format_number(bb84);
        out += "," + format_number(clamp(six)) + "," + format_number(six);
        for (const cat_hash_config& cfg : cat_cfgs) {
            const double r = cat_hash_rate(p, cfg);
            out += "," + format_number(clamp(r)) + "," + format_number(r);
        }
        out += "\n";
    }
    return out;
}

std::string thresholds_json(double tol) {
    const double bb84 = threshold([](double p) { return bb84_worst_case_rate(p); }, 0.05, 0.2, tol);
    const double six = threshold([](double p) { return six_state_hashing_rate(p); }, 0.05, 0.2, tol);
    const cat_threshold_result cat = best_cat_threshold(2, 7, tol);

    ordered_json doc;
    doc["bb84"] = bb84;
    doc["six_state"] = six;
    doc["cat_hash_best"] = cat.p_star;
    doc["cat_hash_best_m"] = cat.m;
    return doc.dump(2);
}

std::string twirl_demo_json(double a, double b, double c, double d, std::uint64_t n_pairs, std::uint64_t seed) {
    const bell_diagonal input(a, b, c, d);
    const bell_diagonal symmetrized = six_state_symmetrize(input);
    const twirl_trace trace = epp_twirl_trace(input, n_pairs, seed);

    ordered_json doc;
    doc["input"] = input.probs();
    doc["symmetrized"] = symmetrized.probs();
    doc["n_pairs"] = n_pairs;
    doc["seed"] = seed;
    doc["rng_algorithm"] = rng_algorithm_name;
    doc["before_counts"] = counts_json(trace.before);
    doc["after_counts"] = counts_json(trace.after);
    ordered_json fractions = ordered_json::object();
    for (std::size_t k = 0; k < 4; ++k) {
        fractions[class_names[k]] = static_cast<double>(trace.after[k]) / static_cast<double>(trace.n_pairs);
    }
    doc["after_fractions"] = fractions;
    return doc.dump(2);
}

std::string simulate_json(const std::string& config_text) {
    const protocol_config cfg = protocol_config_from_json(config_text);
    return to_json(run(cfg));
}

}  // namespace sixstate::cli
