#pragma once

#include <vector>

#include "fiscsim/households.hpp"
#include "fiscsim/production.hpp"
#include "fiscsim/scenario.hpp"

namespace fiscsim::batch {

// Element-parallel sweeps over the pure per-point operations. Every kernel
// has a serial twin with identical arithmetic; because elements never
// interact, the parallel variants return bitwise-identical results, which the
// test suite asserts. The parallel variants fall back to the serial loop when
// the build has no OpenMP support.

std::vector<double> output_levels_serial(const std::vector<FactorBundle>& bundles,
                                         const ProductionParams& p);
std::vector<double> output_levels_parallel(const std::vector<FactorBundle>& bundles,
                                           const ProductionParams& p);

std::vector<MarginalProducts> gradients_serial(const std::vector<FactorBundle>& bundles,
                                               const ProductionParams& p);
std::vector<MarginalProducts> gradients_parallel(const std::vector<FactorBundle>& bundles,
                                                 const ProductionParams& p);

std::vector<double> cross_partials_k_kp_serial(const std::vector<FactorBundle>& bundles,
                                               const ProductionParams& p);
std::vector<double> cross_partials_k_kp_parallel(const std::vector<FactorBundle>& bundles,
                                                 const ProductionParams& p);

std::vector<ScenarioResult> impact_outputs_serial(const std::vector<ScenarioImpulse>& impulses,
                                                  const CalibratedElasticities& e);
std::vector<ScenarioResult> impact_outputs_parallel(const std::vector<ScenarioImpulse>& impulses,
                                                    const CalibratedElasticities& e);

// Steady-state MPC for each wealth weight in phis, holding income and the
// real rate fixed. Wealth rises with phi, so the results trace out the
// mpc-declines-with-wealth curve.
std::vector<double> steady_state_mpcs_serial(const std::vector<double>& phis, double income,
                                             double r, const HouseholdParams& base);
std::vector<double> steady_state_mpcs_parallel(const std::vector<double>& phis, double income,
                                               double r, const HouseholdParams& base);

}  // namespace fiscsim::batch
