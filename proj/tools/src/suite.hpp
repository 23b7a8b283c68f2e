#pragma once

#include <tnl/report.hpp>

#include "config.hpp"

namespace tnl::cli {

/// The full check suite behind `tnl validate`. Checks that raise a library
/// error are recorded as failed (normative) or inconclusive (informational)
/// instead of aborting the run.
ValidationReport run_validation(const RunConfig& config);

}  // namespace tnl::cli
