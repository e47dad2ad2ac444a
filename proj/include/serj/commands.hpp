#ifndef SERJ_COMMANDS_HPP
#define SERJ_COMMANDS_HPP

#include <ostream>

#include "serj/config.hpp"

namespace serj {

/// Exit codes shared by the CLI and the command layer.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitConfig = 2,
    kExitSecrecyInfeasible = 3,
    kExitReliabilityInfeasible = 4,
    kExitValidationFailed = 5,
};

/// Route/sweep/validate, writing the result to config.output_path (or `out`
/// when no path is set) and notes to `diag`. Throw on failure.
int cmd_route(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& diag);

/// Runs the configured command and maps exceptions to exit codes, emitting a
/// machine-readable error record to `diag`.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& diag) noexcept;

} // namespace serj

#endif
