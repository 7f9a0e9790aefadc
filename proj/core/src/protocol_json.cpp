#include "sixstate/protocol_json.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

namespace sixstate {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw std::invalid_argument("config field \"" + field + "\": " + why);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw std::invalid_argument("config: unknown field \"" + (where.empty() ? key : where + "." + key) + "\"");
        }
    }
}

double require_number(const json& obj, const std::string& field) {
    if (!obj.at(field).is_number()) fail(field, "expected a number");
    return obj.at(field).get<double>();
}

std::uint64_t require_uint(const json& obj, const std::string& field) {
    if (!obj.at(field).is_number_unsigned()) fail(field, "expected a non-negative integer");
    return obj.at(field).get<std::uint64_t>();
}

scheme parse_scheme(const std::string& name) {
    if (name == "bb84") return scheme::bb84;
    if (name == "six_state") return scheme::six_state;
    if (name == "six_state_biased") return scheme::six_state_biased;
    fail("scheme", "unknown scheme \"" + name + "\" (known: bb84, six_state, six_state_biased)");
}

channel_config parse_channel(const json& obj) {
    if (!obj.is_object()) fail("channel", "expected an object {kind, p|q}");
    reject_unknown_keys(obj, {"kind", "p", "q"}, "channel");
    if (!obj.contains("kind") || !obj.at("kind").is_string()) fail("channel.kind", "expected a string");
    const std::string kind = obj.at("kind").get<std::string>();
    channel_config out;
    if (kind == "depolarizing") {
        out.which = channel_config::kind::depolarizing;
        if (!obj.contains("p")) fail("channel.p", "required for the depolarizing channel");
        if (obj.contains("q")) fail("channel.q", "not a depolarizing parameter; use \"p\"");
        out.parameter = require_number(obj, "p");
    } else if (kind == "intercept_resend") {
        out.which = channel_config::kind::intercept_resend;
        if (!obj.contains("q")) fail("channel.q", "required for the intercept-resend channel");
        if (obj.contains("p")) fail("channel.p", "not an intercept-resend parameter; use \"q\"");
        out.parameter = require_number(obj, "q");
    } else {
        fail("channel.kind", "unknown kind \"" + kind + "\" (known: depolarizing, intercept_resend)");
    }
    return out;
}

}  // namespace

protocol_config protocol_config_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object at the top level");
    reject_unknown_keys(doc,
                        {"scheme", "n_pulses", "epsilon", "channel", "check_fraction", "e_max_count", "e_max_rate",
                         "min_check_per_basis", "css_preset", "confidence", "rng_seed"},
                        "");

    protocol_config cfg;
    if (!doc.contains("scheme") || !doc.at("scheme").is_string()) fail("scheme", "required string");
    cfg.which_scheme = parse_scheme(doc.at("scheme").get<std::string>());

    if (!doc.contains("n_pulses")) fail("n_pulses", "required");
    cfg.n_pulses = require_uint(doc, "n_pulses");

    if (doc.contains("epsilon")) cfg.epsilon = require_number(doc, "epsilon");

    if (!doc.contains("channel")) fail("channel", "required");
    cfg.channel = parse_channel(doc.at("channel"));

    if (doc.contains("check_fraction")) cfg.check_fraction = require_number(doc, "check_fraction");
    if (doc.contains("e_max_count")) cfg.e_max_count = require_uint(doc, "e_max_count");
    if (doc.contains("e_max_rate")) cfg.e_max_rate = require_number(doc, "e_max_rate");
    if (doc.contains("min_check_per_basis")) cfg.min_check_per_basis = require_uint(doc, "min_check_per_basis");
    if (doc.contains("css_preset")) {
        if (!doc.at("css_preset").is_string()) fail("css_preset", "expected a string");
        cfg.css_preset = doc.at("css_preset").get<std::string>();
    }
    if (doc.contains("confidence")) cfg.confidence = require_number(doc, "confidence");
    if (doc.contains("rng_seed")) cfg.rng_seed = require_uint(doc, "rng_seed");

    cfg.validate();
    return cfg;
}

std::string to_json(const sim_report& report, int indent) {
    ordered_json doc;
    doc["scheme"] = to_string(report.which_scheme);
    doc["sifted_count"] = report.sifted_count;
    doc["check_count"] = report.check_count;
    ordered_json rates = ordered_json::object();
    for (const auto& [b, rate] : report.per_basis_error_rates) rates[to_string(b)] = rate;
    doc["per_basis_error_rates"] = rates;
    ordered_json counts = ordered_json::object();
    for (const auto& [b, count] : report.per_basis_check_counts) counts[to_string(b)] = count;
    doc["per_basis_check_counts"] = counts;
    doc["pooled_error_rate"] = report.pooled_error_rate;
    doc["confidence_delta"] = report.confidence_delta;
    doc["aborted"] = report.aborted;
    doc["abort_reason"] = report.abort_reason;
    if (!report.aborted) {
        doc["key_alice"] = report.key_alice.to_string();
        doc["key_bob"] = report.key_bob.to_string();
    }
    doc["key_match"] = report.key_match;
    doc["key_block_count"] = report.key_block_count;
    doc["insufficient_key_material"] = report.insufficient_key_material;
    doc["seed_echo"] = report.seed_echo;
    doc["rng_algorithm"] = report.rng_algorithm;
    return doc.dump(indent);
}

}  // namespace sixstate
