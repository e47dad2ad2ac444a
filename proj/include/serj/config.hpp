#ifndef SERJ_CONFIG_HPP
#define SERJ_CONFIG_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "serj/model.hpp"
#include "serj/simulation.hpp"

namespace serj {

enum class Command { Route, Sweep, Validate };
enum class OutputFormat { Csv, JsonLines };

/// A fully validated run description. parse_config applies the reference
/// defaults, resolves the topology source (inline generator spec or file)
/// and rejects anything violating a SystemParams invariant.
struct RunConfig {
    Command command = Command::Route;
    SystemParams params;
    std::optional<NetworkTopology> topology;
    std::optional<SweepScenario> scenario;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    std::string output_path; // empty = stdout
    OutputFormat format = OutputFormat::Csv;
    double max_link_distance = std::numeric_limits<double>::infinity();
    double power_warning = std::numeric_limits<double>::infinity();
};

/// Parses a JSON configuration document. Empty text means all defaults.
/// Relative topology_file paths resolve against base_dir.
RunConfig parse_config(const std::string& text, const std::string& base_dir = ".");

/// Same, reading from a file; relative paths resolve against its directory.
RunConfig parse_config_file(const std::string& path);

/// Applies a "param=start:stop:step" sweep expression on top of an optional
/// scenario from the config document.
SweepScenario apply_sweep_expression(std::optional<SweepScenario> base,
                                     const std::string& expression);

OutputFormat format_from_name(const std::string& name);
Command command_from_name(const std::string& name);

} // namespace serj

#endif
