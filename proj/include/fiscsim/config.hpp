#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fiscsim/households.hpp"
#include "fiscsim/multipliers.hpp"
#include "fiscsim/policy.hpp"
#include "fiscsim/production.hpp"
#include "fiscsim/scenario.hpp"

namespace fiscsim {

struct PathConfig {
    bool debt_from_accounts = true;
    double kp0 = 1.0;    // defaults to the fixed point fiscal.g_i / policy.delta_p
    double omega0 = 0.0;
};

/**
 * Everything a command run needs, with the baseline crisis calibration as the
 * default for every section. An empty config document is therefore a complete,
 * runnable configuration. Sections absent from the document are recorded in
 * `notes` so reports can say which calibration was defaulted.
 */
struct RunConfig {
    ProductionParams production;
    HouseholdParams household;
    PolicyParams policy;
    CalibratedElasticities elasticities;
    FactorBundle factors;
    double mpi = 0.1;      // marginal propensity to invest fed to the multipliers
    double b_slope = 1.0;  // rate sensitivity of investment fed to regime_kappa
    // Crisis baseline: outlays exceed taxes by 8% of baseline output, so debt
    // issuance in the accounts-driven path mirrors the stabilization stories.
    FiscalState fiscal{0.2, 0.05, 0.1, 0.27, 0.0, 0.02};
    PathConfig path;
    std::vector<ScenarioImpulse> scenarios;  // empty: use the built-in eight
    std::string output_format = "markdown";
    std::uint64_t seed = 0;
    std::vector<std::string> notes;  // "defaulted: <section>" provenance records
};

// Parses and validates a JSON config document. Unknown keys are rejected and
// every invariant violation names the offending key path. Throws ConfigError.
RunConfig parse_config(const std::string& text);

// Full JSON image of a config; parse_config(config_json(c).dump()) == c.
nlohmann::ordered_json config_json(const RunConfig& cfg);

std::string serialize_config(const RunConfig& cfg);

}  // namespace fiscsim
