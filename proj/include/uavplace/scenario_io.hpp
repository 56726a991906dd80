// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "uavplace/scenario.hpp"

namespace uavp {

// Parses and validates a scenario document. Missing optional sections fall
// back to defaults: the 5250/20 MHz, 20 dBm, 0 dBi, -85 dBm, 20 dB budget, a
// 1 m grid, the built-in MCS ladder, and venue bounds derived from the user
// bounding box (2 m margin), tallest building and 100 m ceiling.
// Throws ParseError, ValidationError, DemandExceedsTable or IoError.
Scenario load_scenario(const std::filesystem::path& path);

Scenario scenario_from_json(const nlohmann::json& j);

// Canonical boundary-unit form: every default is materialized, keys are
// emitted in sorted order, so rewriting a loaded scenario is byte-stable.
nlohmann::json scenario_to_json(const Scenario& s);

void save_scenario(const Scenario& s, const std::filesystem::path& path);

// Shared file helpers (throw IoError).
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// FNV-1a 64-bit content hash, hex encoded; recorded in run manifests.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace uavp
