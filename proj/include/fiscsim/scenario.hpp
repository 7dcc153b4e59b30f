#pragma once

#include <string>
#include <vector>

#include "fiscsim/policy.hpp"

namespace fiscsim {

/**
 * Reduced-form impact coefficients for the crisis policy experiment. The
 * one-period output response to a policy impulse is the linear combination
 *
 *   y_hat = m_gc*g_c_hat + m_gi*g_i_hat + eta*q_hat - chi*b_hat.
 */
struct CalibratedElasticities {
    double m_gc = 0.9;  // government-consumption multiplier
    double m_gi = 1.6;  // government-investment multiplier
    double eta = 0.15;  // net-export response to a real devaluation
    double chi = 0.2;   // wealth-channel drag per unit of new debt
};

// Policy impulse in log-deviations from the crisis baseline. b_hat is new
// debt issuance as a fraction of baseline GDP (a flow, not the stock).
struct ScenarioImpulse {
    double g_c_hat = 0.0;
    double g_i_hat = 0.0;
    double q_hat = 0.0;  // positive = real devaluation
    double b_hat = 0.0;
    std::string label;
};

// y_hat is stored as the exact floating-point sum of the four channel
// contributions, so the decomposition identity holds with zero error.
struct ScenarioResult {
    std::string label;
    double chan_gc = 0.0;  // m_gc * g_c_hat
    double chan_gi = 0.0;  // m_gi * g_i_hat
    double chan_q = 0.0;   // eta * q_hat
    double chan_b = 0.0;   // -chi * b_hat
    double y_hat = 0.0;
};

struct PathPoint {
    ScenarioResult result;
    double public_capital = 0.0;  // stock after this period's investment
    double debt = 0.0;            // stock after this period's issuance
    double b_hat = 0.0;           // issuance fed to the wealth channel
    double nominal_rate = 0.0;
    double real_rate = 0.0;
    bool at_zlb = false;
    double sentiment = 0.0;
};

struct PathOptions {
    // When true, b_hat is taken from the government accounts: the period's
    // new issuance over baseline GDP. When false, each impulse's own b_hat
    // field is used and the debt stock stays frozen.
    bool debt_from_accounts = true;
    double kp0 = 1.0;    // initial public-capital stock
    double omega0 = 0.0; // initial sentiment
    // One innovation per period for the sentiment process; empty means zeros.
    std::vector<double> innovations;
};

void validate(const CalibratedElasticities& e);

// Throws when a component's magnitude reaches 1 (log-linearization breaks).
void validate(const ScenarioImpulse& imp);

// True when any component exceeds 0.2 in magnitude: the linear approximation
// is strained and reports should say so.
bool linearization_strained(const ScenarioImpulse& imp);

ScenarioResult impact_output(const ScenarioImpulse& imp, const CalibratedElasticities& e);

// The eight built-in stabilization scenarios, in presentation order:
// A1-A3 shock austerity, B1-B2 gradualism, C1-C3 composition switch.
std::vector<ScenarioImpulse> builtin_scenarios();

// impact_output over the built-in scenarios.
std::vector<ScenarioResult> run_table1(const CalibratedElasticities& e);

// Multi-period engine: per period, fiscal impulses move the government
// accounts, debt issuance feeds the wealth channel, public capital follows
// its law of motion, and the policy block prices the realized output level.
// Expected inflation is next period's exogenous value shifted by sentiment.
// Component errors are rethrown with the period index prefixed.
std::vector<PathPoint> simulate_path(const std::vector<ScenarioImpulse>& plan,
                                     const CalibratedElasticities& e, const FiscalState& fiscal0,
                                     const PolicyParams& p, const std::vector<double>& pi_path,
                                     const PathOptions& opts = {});

}  // namespace fiscsim
