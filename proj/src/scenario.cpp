#include "fiscsim/scenario.hpp"

#include <cmath>
#include <sstream>

#include "fiscsim/errors.hpp"

namespace fiscsim {

namespace {

[[noreturn]] void fail(const std::string& field, const char* requirement, double got) {
    std::ostringstream os;
    os << field << " " << requirement << " (got " << got << ")";
    throw DomainError(os.str());
}

void check_component(const ScenarioImpulse& imp, const char* name, double value) {
    const std::string field = imp.label.empty() ? name : imp.label + "." + name;
    if (!std::isfinite(value)) fail(field, "must be finite", value);
    if (!(std::abs(value) < 1.0))
        fail(field, "must stay below 1 in magnitude for the log-linear approximation", value);
}

}  // namespace

void validate(const CalibratedElasticities& e) {
    if (!(e.m_gc >= 0.0)) fail("m_gc", "must be >= 0", e.m_gc);
    if (!(e.m_gi >= 0.0)) fail("m_gi", "must be >= 0", e.m_gi);
    if (!(e.eta >= 0.0)) fail("eta", "must be >= 0", e.eta);
    if (!(e.chi >= 0.0)) fail("chi", "must be >= 0", e.chi);
}

void validate(const ScenarioImpulse& imp) {
    check_component(imp, "g_c_hat", imp.g_c_hat);
    check_component(imp, "g_i_hat", imp.g_i_hat);
    check_component(imp, "q_hat", imp.q_hat);
    check_component(imp, "b_hat", imp.b_hat);
}

bool linearization_strained(const ScenarioImpulse& imp) {
    return std::abs(imp.g_c_hat) > 0.2 || std::abs(imp.g_i_hat) > 0.2 ||
           std::abs(imp.q_hat) > 0.2 || std::abs(imp.b_hat) > 0.2;
}

ScenarioResult impact_output(const ScenarioImpulse& imp, const CalibratedElasticities& e) {
    validate(e);
    validate(imp);
    ScenarioResult r;
    r.label = imp.label;
    r.chan_gc = e.m_gc * imp.g_c_hat;
    r.chan_gi = e.m_gi * imp.g_i_hat;
    r.chan_q = e.eta * imp.q_hat;
    r.chan_b = -e.chi * imp.b_hat;
    r.y_hat = r.chan_gc + r.chan_gi + r.chan_q + r.chan_b;
    return r;
}

std::vector<ScenarioImpulse> builtin_scenarios() {
    return {
        {-0.05, 0.0, 0.10, 0.03, "A1"},   // shock austerity, new debt, devaluation
        {-0.05, 0.0, 0.10, 0.0, "A2"},    // shock austerity, devaluation only
        {-0.05, 0.0, 0.0, 0.03, "A3"},    // shock austerity, fixed exchange rate
        {-0.017, 0.0, 0.033, 0.01, "B1"}, // gradualism, first-year slice, new debt
        {-0.017, 0.0, 0.033, 0.0, "B2"},  // gradualism, no new debt
        {-0.04, 0.04, 0.05, 0.01, "C1"},  // composition switch, debt-financed margin
        {-0.04, 0.04, 0.0, 0.0, "C2"},    // composition switch alone
        {-0.04, 0.04, 0.05, 0.0, "C3"},   // composition switch, devaluation, no debt
    };
}

std::vector<ScenarioResult> run_table1(const CalibratedElasticities& e) {
    std::vector<ScenarioResult> out;
    for (const ScenarioImpulse& imp : builtin_scenarios()) out.push_back(impact_output(imp, e));
    return out;
}

namespace {

template <class Fn>
auto at_period(std::size_t t, Fn&& fn) {
    try {
        return fn();
    } catch (const DomainError& err) {
        throw DomainError("period " + std::to_string(t) + ": " + err.what());
    } catch (const ConvergenceError& err) {
        throw ConvergenceError("period " + std::to_string(t) + ": " + err.what());
    }
}

}  // namespace

std::vector<PathPoint> simulate_path(const std::vector<ScenarioImpulse>& plan,
                                     const CalibratedElasticities& e, const FiscalState& fiscal0,
                                     const PolicyParams& p, const std::vector<double>& pi_path,
                                     const PathOptions& opts) {
    validate(e);
    validate(fiscal0);
    validate(p);
    if (pi_path.size() != plan.size())
        fail("pi_path", "must have one inflation value per planned period",
             static_cast<double>(pi_path.size()));
    if (!opts.innovations.empty() && opts.innovations.size() != plan.size())
        fail("innovations", "must be empty or one per planned period",
             static_cast<double>(opts.innovations.size()));
    if (!(opts.kp0 >= 0.0)) fail("kp0", "must be >= 0", opts.kp0);

    const double y0 = p.y_pot;  // baseline output that scales the hat variables
    double debt = fiscal0.b_prev;
    double r_prev = fiscal0.r_prev;
    double kp = opts.kp0;
    double omega = opts.omega0;

    std::vector<PathPoint> path;
    path.reserve(plan.size());
    for (std::size_t t = 0; t < plan.size(); ++t) {
        PathPoint pt = at_period(t, [&] {
            const ScenarioImpulse& imp = plan[t];
            validate(imp);
            omega = sentiment_step(omega, opts.innovations.empty() ? 0.0 : opts.innovations[t], p);

            const double g_c_level = fiscal0.g_c + imp.g_c_hat * y0;
            const double g_i_level = fiscal0.g_i + imp.g_i_hat * y0;

            ScenarioImpulse used = imp;
            if (opts.debt_from_accounts) {
                const DebtStep step =
                    debt_step({g_c_level, g_i_level, fiscal0.tr, fiscal0.tax, debt, r_prev});
                used.b_hat = (step.level - debt) / y0;  // this period's new issuance
                debt = step.level;
            }

            const ScenarioResult result = impact_output(used, e);
            const double y_level = y0 * (1.0 + result.y_hat);
            const double pi = pi_path[t];
            const double i = taylor_rate(pi, y_level, p);
            const bool zlb = is_zlb(pi, y_level, p);
            const double pi_ahead = pi_path[t + 1 < pi_path.size() ? t + 1 : t];
            const double r = fisher_real_rate(i, expectation(pi_ahead, omega));
            kp = public_capital_step(kp, g_i_level, p);

            r_prev = r;
            return PathPoint{result, kp, debt, used.b_hat, i, r, zlb, omega};
        });
        path.push_back(std::move(pt));
    }
    return path;
}

}  // namespace fiscsim
