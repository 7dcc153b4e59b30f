#pragma once

#include <string>

#include "fiscsim/config.hpp"
#include "fiscsim/report.hpp"

namespace fiscsim {

// Dispatches one of {table1, scenario, multiplier, mpc, production, path} to
// the library and assembles its report, including the channel decomposition
// and the calibration provenance notes. Throws ConfigError for an unknown
// command; component errors propagate with command context.
Report run_command(const std::string& name, const RunConfig& cfg);

}  // namespace fiscsim
