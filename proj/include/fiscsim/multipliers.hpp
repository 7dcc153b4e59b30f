#pragma once

#include "fiscsim/policy.hpp"

namespace fiscsim {

/**
 * Inputs to the structural fiscal multipliers.
 *
 * kappa is the composite interest-rate feedback: the rate response to output
 * times the rate sensitivity of investment, folded into one non-negative
 * number. kappa > 0 dampens the multiplier (monetary offset); at the ZLB the
 * offset is absent and kappa = 0, which is why ZLB multipliers are larger.
 */
struct MultiplierInputs {
    double mpc_agg = 0.5;  // aggregate MPC, in (0,1)
    double mpi = 0.1;      // marginal propensity to invest, >= 0
    double mpk_p = 0.1;    // marginal product of public capital, >= 0
    double kappa = 0.0;    // interest-rate feedback magnitude, >= 0
};

void validate(const MultiplierInputs& m);

// Solves the self-referential relation
//   m = (1 + mpk_p) / (1 - mpc_agg - mpi*(1 - kappa*m))
// as the quadratic mpi*kappa*m^2 + (1-mpc_agg-mpi)*m - (1+mpk_p) = 0, taking
// the positive root, which is continuous with the kappa = 0 limit
// (1+mpk_p)/(1-mpc_agg-mpi) and strictly decreasing in kappa.
// Throws ConvergenceError("divergent multiplier ...") when 1-mpc_agg-mpi <= 0.
double investment_multiplier(const MultiplierInputs& m);

// Same fixed-point structure with numerator 1: no supply-side kick from
// public capital, hence smaller than the investment multiplier when mpk_p > 0.
double consumption_multiplier(const MultiplierInputs& m);

// Iterates m <- numerator/(1 - mpc_agg - mpi*(1 - kappa*m)) from the kappa = 0
// value; the independent cross-check for the quadratic root.
double fixed_point_multiplier(const MultiplierInputs& m, double numerator);

// Composite feedback for the current regime: 0 at the ZLB (no monetary
// response), otherwise b_slope * phi_y / (y_pot * (1 + pi)), the Taylor output
// response passed through the Fisher equation at the prevailing inflation.
double regime_kappa(double pi, double y, const PolicyParams& p, double b_slope);

}  // namespace fiscsim
