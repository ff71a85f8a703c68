#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hybridcov/scenario.hpp"

namespace hybridcov::config {

/// Parses the flat "key = value [unit]" format ('#' starts a comment). Keys
/// missing from the text keep their defaults; unknown or repeated keys, bad
/// numbers, unknown units and out-of-range values throw ConfigError with the
/// line number. A value without a unit is read in the key's default unit.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical text for every key, in default units, with round-trip precision.
std::string save_scenario(const Scenario& scn);
void save_scenario(const Scenario& scn, const std::filesystem::path& path);

/// Sets one key from a value in the key's default unit (used for sweep axes).
void apply_setting(Scenario& scn, std::string_view key, double value);
/// Value of a key in its default unit.
double read_setting(const Scenario& scn, std::string_view key);

/// Canonical key names, in file order.
std::vector<std::string> known_keys();
/// Default unit label for a key ("" for dimensionless).
std::string default_unit(std::string_view key);

/// FNV-1a over save_scenario(scn), printed as 16 hex digits.
std::string scenario_hash(const Scenario& scn);

}  // namespace hybridcov::config
