#pragma once

#include <ostream>
#include <string>

#include <tnl/errors.hpp>

#include "config.hpp"

namespace tnl::cli {

/// 0 pass, 1 normative-check failure, 2 usage or input error,
/// 3 internal numerical failure (singular system, overflow, ...).
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitNumerical = 3 };

int exit_code_for(ErrorKind kind) noexcept;

/// {"error": {"kind", "message"}, "exit_code"} on one line.
std::string error_json(std::string_view kind, std::string_view message, int exit_code);

/// <out>/trajectory.csv and <out>/solution.json.
int cmd_solve(const RunConfig& config, std::ostream& out);
/// <out>/report.json; one summary line per check on `out`.
int cmd_validate(const RunConfig& config, std::ostream& out);
/// <out>/fig1.csv, <out>/fig2.csv and <out>/figures.json.
int cmd_figures(const RunConfig& config, std::ostream& out);

/// Full command line: parsing, config file, dispatch, error reporting.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tnl::cli
