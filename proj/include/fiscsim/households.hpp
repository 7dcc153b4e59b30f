#pragma once

namespace fiscsim {

/**
 * Two household blocks share these parameters. A fraction lambda is
 * liquidity-constrained (consumes income one-for-one); the rest accumulate
 * wealth, which enters utility directly with weight phi and curvature gamma.
 * That wealth motive is what makes the Euler equation "modified" and the
 * marginal propensity to consume strictly positive.
 */
struct HouseholdParams {
    double beta = 0.96;    // discount factor, in (0,1)
    double sigma_c = 2.0;  // consumption curvature, > 0
    double gamma = 2.0;    // wealth curvature, > 0
    double phi = 0.1;      // wealth weight in utility, >= 0
    double c_min = 0.3;    // subsistence consumption, >= 0
    double lambda = 0.45;  // liquidity-constrained population share, in [0,1]
};

// Stationary point of the wealth-accumulating household. The solver returns
// assets_next == assets; the budget identity
// assets_next = (1+r)*(assets + income - consumption) then holds exactly.
struct WaState {
    double assets = 0.0;
    double income = 0.0;
    double consumption = 0.0;  // > c_min
    double assets_next = 0.0;  // > 0
};

void validate(const HouseholdParams& p);

// Liquidity-constrained consumption: income passed through one-for-one.
double lc_consumption(double income);

// (C-c_min)^(-sigma_c) - (1+r)*phi*A_next^(-gamma) - beta*(1+r)*e_term.
// Zero iff the wealth-modified Euler equation holds; e_term is the expected
// future marginal utility of consumption.
double euler_residual(const WaState& s, double r, double e_term, const HouseholdParams& p);

// Solves the stationary Euler + budget pair for (assets, consumption).
// Requires phi > 0 (phi = 0 leaves the steady state indeterminate),
// beta*(1+r) < 1 and income > c_min. Throws DomainError when those fail and
// ConvergenceError with diagnostics when bracketing breaks down.
WaState wa_steady_state(double income, double r, const HouseholdParams& p);

// MPC out of a transitory income change, from differentiating the period
// system: N/(D+N) with N = (1+r)^2*phi*gamma*A_next^(-gamma-1) and
// D = sigma_c*(C-c_min)^(-sigma_c-1). Strictly in (0,1) for phi > 0;
// returns exactly 0 in the phi = 0 limit.
double mpc_closed_form(const WaState& s, double r, const HouseholdParams& p);

// Finite-difference MPC: freezes the expectation term at its solved baseline
// value, re-solves the one-period system at income +/- h with start-of-period
// assets fixed, and returns the central difference dC/dy.
double mpc_oracle(double income, double r, const HouseholdParams& p, double h);

// lambda*1 + (1-lambda)*mpc_wa: population-weighted MPC of the two blocks.
double aggregate_mpc(double mpc_wa, const HouseholdParams& p);

}  // namespace fiscsim
