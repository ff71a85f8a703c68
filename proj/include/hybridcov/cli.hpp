#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hybridcov/constellation.hpp"
#include "hybridcov/scenario.hpp"

namespace hybridcov::cli {

inline constexpr const char* kToolVersion = "hybridcov 0.1.0";

enum class Command { coverage_sweep, simulate, operating_curve, compare_constellations, export_snapshot };
enum class OutputFormat { csv, json };

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_config = 2, exit_numerical = 3 };

struct RunConfig {
    std::optional<std::filesystem::path> scenario_path;  // built-in defaults when empty
    Command command = Command::coverage_sweep;
    std::string axis = "bs_density";
    std::vector<double> values;  // axis values in the key's default unit
    std::int64_t trials = 10000;
    std::uint64_t seed = 1;
    std::optional<std::filesystem::path> out;  // stdout when empty
    OutputFormat format = OutputFormat::csv;
    ConstellationKind kind = ConstellationKind::uniform_random;
    double target = 0.8;
    int workers = 0;

    /// Throws ConfigError on violated invariants.
    void validate() const;
};

Command parse_command(const std::string& name);
std::string to_string(Command c);

/// A rectangular result set with a metadata block.
struct Table {
    using Cell = std::variant<double, std::int64_t, std::string, bool>;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Builds the table for a command without writing it anywhere.
Table execute(const RunConfig& cfg, const Scenario& scn);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

/// Loads the scenario, executes, writes output. Returns an ExitCode and
/// prints diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& err);

/// Flag parsing front end used by the executable.
int main(int argc, char** argv);

}  // namespace hybridcov::cli
