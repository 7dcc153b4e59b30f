#pragma once

namespace fiscsim {

/**
 * Monetary rule, fiscal laws of motion, and the sentiment process.
 *
 * The nominal rate follows a Taylor rule clamped at zero; the boundary i = 0
 * counts as "at the ZLB" so regime switches fire when the clamp binds with
 * equality. Inflation is always an exogenous input. Sentiment is an AR(1)
 * whose innovations are injected by the caller, keeping every operation here
 * deterministic.
 */
struct PolicyParams {
    double rho_eq = 0.02;       // equilibrium real rate, per period
    double pi_star = 0.02;      // inflation target
    double phi_pi = 1.5;        // Taylor inflation response, >= 0
    double phi_y = 0.5;         // Taylor output-gap response, >= 0
    double y_pot = 1.0;         // potential output, > 0
    double delta_p = 0.05;      // public-capital depreciation, in (0,1)
    double rho_omega = 0.8;     // sentiment persistence, in [0,1)
    double sigma_omega = 0.0;   // sentiment innovation scale, >= 0
};

// Government accounts for one period. Debt may go negative (net creditor)
// and the position carries forward; the flow fields may not be negative.
struct FiscalState {
    double g_c = 0.0;     // government consumption, >= 0
    double g_i = 0.0;     // government investment, >= 0
    double tr = 0.0;      // transfers, >= 0
    double tax = 0.0;     // lump-sum taxes, >= 0
    double b_prev = 0.0;  // inherited debt; negative = net creditor position
    double r_prev = 0.0;  // real rate paid (or earned) on inherited debt
};

struct DebtStep {
    double level = 0.0;
    bool net_creditor = false;  // level < 0: taxes exceeded outlays plus service
};

void validate(const PolicyParams& p);
void validate(const FiscalState& f);

// max(0, rho_eq + pi_star + phi_pi*(pi - pi_star) + phi_y*(y - y_pot)/y_pot).
double taylor_rate(double pi, double y, const PolicyParams& p);

// True iff the unclamped Taylor expression is <= 0 (boundary counts).
bool is_zlb(double pi, double y, const PolicyParams& p);

// r = (1+i)/(1+e_pi) - 1.
double fisher_real_rate(double i, double e_pi);

// (1-delta_p)*kp + g_i; fixed point at g_i/delta_p.
double public_capital_step(double kp, double g_i, const PolicyParams& p);

// B = g_c + g_i + tr + (1+r_prev)*b_prev - tax.
DebtStep debt_step(const FiscalState& f);

// Sentiment shifts a model-consistent expectation additively.
double expectation(double model_exp, double omega);

// rho_omega*omega_prev + sigma_omega*innovation.
double sentiment_step(double omega_prev, double innovation, const PolicyParams& p);

}  // namespace fiscsim
