#include "fiscsim/batch.hpp"

#include <cstddef>
#include <exception>

namespace fiscsim::batch {

namespace {

template <class T, class Fn>
std::vector<T> map_serial(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

// Exceptions may not cross an OpenMP region, so the first one is captured and
// rethrown after the loop joins.
template <class T, class Fn>
std::vector<T> map_parallel(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(fiscsim_batch_error)
#endif
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

double mpc_at_phi(double phi, double income, double r, HouseholdParams params) {
    params.phi = phi;
    const WaState s = wa_steady_state(income, r, params);
    return mpc_closed_form(s, r, params);
}

}  // namespace

std::vector<double> output_levels_serial(const std::vector<FactorBundle>& bundles,
                                         const ProductionParams& p) {
    return map_serial<double>(bundles.size(), [&](std::size_t i) { return output(bundles[i], p); });
}

std::vector<double> output_levels_parallel(const std::vector<FactorBundle>& bundles,
                                           const ProductionParams& p) {
    return map_parallel<double>(bundles.size(),
                                [&](std::size_t i) { return output(bundles[i], p); });
}

std::vector<MarginalProducts> gradients_serial(const std::vector<FactorBundle>& bundles,
                                               const ProductionParams& p) {
    return map_serial<MarginalProducts>(
        bundles.size(), [&](std::size_t i) { return marginal_products(bundles[i], p); });
}

std::vector<MarginalProducts> gradients_parallel(const std::vector<FactorBundle>& bundles,
                                                 const ProductionParams& p) {
    return map_parallel<MarginalProducts>(
        bundles.size(), [&](std::size_t i) { return marginal_products(bundles[i], p); });
}

std::vector<double> cross_partials_k_kp_serial(const std::vector<FactorBundle>& bundles,
                                               const ProductionParams& p) {
    return map_serial<double>(bundles.size(),
                              [&](std::size_t i) { return cross_partial_k_kp(bundles[i], p); });
}

std::vector<double> cross_partials_k_kp_parallel(const std::vector<FactorBundle>& bundles,
                                                 const ProductionParams& p) {
    return map_parallel<double>(bundles.size(),
                                [&](std::size_t i) { return cross_partial_k_kp(bundles[i], p); });
}

std::vector<ScenarioResult> impact_outputs_serial(const std::vector<ScenarioImpulse>& impulses,
                                                  const CalibratedElasticities& e) {
    return map_serial<ScenarioResult>(impulses.size(),
                                      [&](std::size_t i) { return impact_output(impulses[i], e); });
}

std::vector<ScenarioResult> impact_outputs_parallel(const std::vector<ScenarioImpulse>& impulses,
                                                    const CalibratedElasticities& e) {
    return map_parallel<ScenarioResult>(
        impulses.size(), [&](std::size_t i) { return impact_output(impulses[i], e); });
}

std::vector<double> steady_state_mpcs_serial(const std::vector<double>& phis, double income,
                                             double r, const HouseholdParams& base) {
    return map_serial<double>(phis.size(),
                              [&](std::size_t i) { return mpc_at_phi(phis[i], income, r, base); });
}

std::vector<double> steady_state_mpcs_parallel(const std::vector<double>& phis, double income,
                                               double r, const HouseholdParams& base) {
    return map_parallel<double>(
        phis.size(), [&](std::size_t i) { return mpc_at_phi(phis[i], income, r, base); });
}

}  // namespace fiscsim::batch
