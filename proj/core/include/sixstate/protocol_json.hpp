#pragma once

#include <string>

#include "sixstate/protocol.hpp"

namespace sixstate {

/// Parses a JSON configuration document (field names mirror protocol_config;
/// see the README for the schema). Unknown keys, type mismatches and invalid
/// values are rejected with a message naming the offending field.
protocol_config protocol_config_from_json(const std::string& text);

/// Serializes a report to pretty-printed JSON with a stable key order. The
/// key strings are omitted when the run aborted.
std::string to_json(const sim_report& report, int indent = 2);

}  // namespace sixstate
