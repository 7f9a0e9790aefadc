#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Rendering behind each CLI subcommand, separated from argument parsing so
// the exact output text is unit-testable.
namespace sixstate::cli {

/// CSV of the one-way key rates on an evenly spaced grid. Columns: p, then a
/// clamped (max with 0) and a raw column for each rate family. Requires
/// 0 <= p_min < p_max <= 0.2 and steps >= 2 so every p stays inside all
/// rate functions' domains.
std::string rates_csv(double p_min, double p_max, int steps, const std::vector<int>& cat_ms);

/// JSON object with the bisection thresholds of the rate families; the
/// block-hashing threshold is maximized over block lengths 2..7.
std::string thresholds_json(double tol);

/// JSON comparison of a sampled random-relabeling run against the exact
/// symmetrized distribution.
std::string twirl_demo_json(double a, double b, double c, double d, std::uint64_t n_pairs, std::uint64_t seed);

/// Parses a config document, runs the protocol, returns the report JSON.
std::string simulate_json(const std::string& config_text);

}  // namespace sixstate::cli
