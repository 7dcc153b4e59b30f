#include "fiscsim/cli.hpp"

#include <random>

#include "fiscsim/batch.hpp"
#include "fiscsim/errors.hpp"
#include "fiscsim/multipliers.hpp"

namespace fiscsim {

using nlohmann::ordered_json;

namespace {

ordered_json pick_inputs(const RunConfig& cfg, std::initializer_list<const char*> sections) {
    const ordered_json full = config_json(cfg);
    ordered_json out;
    for (const char* s : sections) out[s] = full.at(s);
    return out;
}

Report base_report(const std::string& command, const RunConfig& cfg) {
    Report r;
    r.command = command;
    if (cfg.notes.empty())
        r.notes.push_back("calibration: all sections supplied by config");
    else
        r.notes = cfg.notes;
    return r;
}

const std::vector<std::string>& scenario_columns() {
    static const std::vector<std::string> cols = {"g_c_hat", "g_i_hat", "q_hat",  "b_hat",
                                                  "chan_gc", "chan_gi", "chan_q", "chan_b",
                                                  "y_hat"};
    return cols;
}

const std::vector<std::string>& scenario_pretty() {
    static const std::vector<std::string> heads = {
        "Ĝ^C", "Ĝ^I", "q̂", "B̂", "m_GC·Ĝ^C", "m_GI·Ĝ^I", "η·q̂", "-χ·B̂", "Ŷ"};
    return heads;
}

void append_scenario_rows(Report& r, const std::vector<ScenarioImpulse>& impulses,
                          const std::vector<ScenarioResult>& results) {
    for (std::size_t i = 0; i < impulses.size(); ++i) {
        const ScenarioImpulse& imp = impulses[i];
        const ScenarioResult& res = results[i];
        r.rows.push_back({res.label,
                          {imp.g_c_hat, imp.g_i_hat, imp.q_hat, imp.b_hat, res.chan_gc,
                           res.chan_gi, res.chan_q, res.chan_b, res.y_hat}});
    }
}

Report scenario_table(const std::string& command, const RunConfig& cfg,
                      const std::vector<ScenarioImpulse>& impulses) {
    Report r = base_report(command, cfg);
    r.label_head = "Scenario";
    r.columns = scenario_columns();
    r.pretty = scenario_pretty();
    r.inputs = pick_inputs(cfg, {"elasticities"});
    for (const ScenarioImpulse& imp : impulses)
        if (linearization_strained(imp))
            r.notes.push_back("linearization strained: " + imp.label +
                              " has a component beyond 0.2 in magnitude");
    append_scenario_rows(r, impulses, batch::impact_outputs_parallel(impulses, cfg.elasticities));
    return r;
}

// Model-consistent real rate for a regime: Taylor rate at (pi, y), expected
// inflation taken at the same pi, passed through the Fisher equation.
double regime_real_rate(double pi, double y, const PolicyParams& p) {
    return fisher_real_rate(taylor_rate(pi, y, p), pi);
}

double wa_mpc_or_limit(const RunConfig& cfg, double r) {
    if (cfg.household.phi == 0.0) return 0.0;
    const WaState s = wa_steady_state(cfg.policy.y_pot, r, cfg.household);
    return mpc_closed_form(s, r, cfg.household);
}

Report multiplier_report(const RunConfig& cfg) {
    Report r = base_report("multiplier", cfg);
    r.label_head = "regime";
    r.columns = {"pi", "y", "kappa", "mpc_wa", "mpc_agg", "mpk_p", "m_gc", "m_gi", "gi_gc_ratio"};
    r.inputs = pick_inputs(cfg, {"household", "policy", "production", "factors", "multiplier"});
    if (cfg.household.phi == 0.0)
        r.notes.push_back("limit case: phi = 0, wealth-accumulator mpc is its limit value 0");

    const double mpk_p = marginal_products(cfg.factors, cfg.production).mpkp;
    // Normal regime: economy on target. ZLB regime: a slump deep enough that
    // the Taylor rule clamps (inflation 4 points under target, output 20%
    // under potential, with the default response coefficients).
    const struct {
        const char* label;
        double pi, y;
    } regimes[] = {{"normal", cfg.policy.pi_star, cfg.policy.y_pot},
                   {"zlb", cfg.policy.pi_star - 0.04, 0.8 * cfg.policy.y_pot}};
    for (const auto& regime : regimes) {
        const double kappa = regime_kappa(regime.pi, regime.y, cfg.policy, cfg.b_slope);
        const double rr = regime_real_rate(regime.pi, regime.y, cfg.policy);
        const double mpc_wa = wa_mpc_or_limit(cfg, rr);
        const double mpc_agg = aggregate_mpc(mpc_wa, cfg.household);
        const MultiplierInputs in{mpc_agg, cfg.mpi, mpk_p, kappa};
        const double m_gi = investment_multiplier(in);
        const double m_gc = consumption_multiplier(in);
        r.rows.push_back({regime.label,
                          {regime.pi, regime.y, kappa, mpc_wa, mpc_agg, mpk_p, m_gc, m_gi,
                           m_gi / m_gc}});
    }
    return r;
}

Report mpc_report(const RunConfig& cfg) {
    Report r = base_report("mpc", cfg);
    r.label_head = "household";
    r.columns = {"phi", "assets", "consumption", "mpc_wa", "mpc_oracle", "mpc_agg"};
    r.inputs = pick_inputs(cfg, {"household", "policy"});
    const double y = cfg.policy.y_pot;
    if (cfg.household.phi == 0.0) {
        r.notes.push_back(
            "limit case: phi = 0 makes the steady state indeterminate; the wealth-"
            "accumulator mpc is its limit value 0 and no asset position is reported");
        r.rows.push_back({"wa", {0.0, 0.0, 0.0, 0.0, 0.0, aggregate_mpc(0.0, cfg.household)}});
        return r;
    }
    const double rr = regime_real_rate(cfg.policy.pi_star, y, cfg.policy);
    const WaState s = wa_steady_state(y, rr, cfg.household);
    const double closed = mpc_closed_form(s, rr, cfg.household);
    const double oracle = mpc_oracle(y, rr, cfg.household, 1e-6 * y);
    r.rows.push_back({"wa",
                      {cfg.household.phi, s.assets, s.consumption, closed, oracle,
                       aggregate_mpc(closed, cfg.household)}});
    return r;
}

Report production_report(const RunConfig& cfg) {
    Report r = base_report("production", cfg);
    r.label_head = "quantity";
    r.columns = {"value"};
    r.inputs = pick_inputs(cfg, {"production", "factors"});
    const double y = output(cfg.factors, cfg.production);
    const MarginalProducts mp = marginal_products(cfg.factors, cfg.production);
    const FactorShares sh = factor_shares(cfg.factors, cfg.production);
    r.rows = {{"Y", {y}},
              {"MPK", {mp.mpk}},
              {"MPL", {mp.mpl}},
              {"MPKP", {mp.mpkp}},
              {"s_K", {sh.s_k}},
              {"s_L", {sh.s_l}},
              {"s_P", {sh.s_p}},
              {"d2Y_dK_dKP", {cross_partial_k_kp(cfg.factors, cfg.production)}},
              {"d2Y_dL_dKP", {cross_partial_l_kp(cfg.factors, cfg.production)}}};
    return r;
}

Report path_report(const RunConfig& cfg) {
    Report r = base_report("path", cfg);
    r.label_head = "period";
    r.columns = {"y_hat", "chan_gc", "chan_gi", "chan_q", "chan_b",       "public_capital",
                 "debt",  "b_hat",   "i",       "r",      "at_zlb",       "sentiment"};
    r.inputs = pick_inputs(cfg, {"elasticities", "policy", "fiscal", "path"});

    const std::vector<ScenarioImpulse> plan =
        cfg.scenarios.empty() ? builtin_scenarios() : cfg.scenarios;
    const std::vector<double> pi_path(plan.size(), cfg.policy.pi_star);
    PathOptions opts;
    opts.debt_from_accounts = cfg.path.debt_from_accounts;
    opts.kp0 = cfg.path.kp0;
    opts.omega0 = cfg.path.omega0;
    if (cfg.policy.sigma_omega > 0.0) {
        std::mt19937_64 rng(cfg.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        opts.innovations.resize(plan.size());
        for (double& eps : opts.innovations) eps = gauss(rng);
        r.notes.push_back("sentiment innovations drawn with seed " + std::to_string(cfg.seed));
    }

    const std::vector<PathPoint> path =
        simulate_path(plan, cfg.elasticities, cfg.fiscal, cfg.policy, pi_path, opts);
    for (std::size_t t = 0; t < path.size(); ++t) {
        const PathPoint& pt = path[t];
        const std::string label =
            "t" + std::to_string(t) + (pt.result.label.empty() ? "" : ":" + pt.result.label);
        r.rows.push_back({label,
                          {pt.result.y_hat, pt.result.chan_gc, pt.result.chan_gi, pt.result.chan_q,
                           pt.result.chan_b, pt.public_capital, pt.debt, pt.b_hat, pt.nominal_rate,
                           pt.real_rate, pt.at_zlb ? 1.0 : 0.0, pt.sentiment}});
    }
    return r;
}

}  // namespace

Report run_command(const std::string& name, const RunConfig& cfg) {
    if (name == "table1") return scenario_table("table1", cfg, builtin_scenarios());
    if (name == "scenario") {
        const bool builtin = cfg.scenarios.empty();
        return scenario_table("scenario", cfg,
                              builtin ? builtin_scenarios() : cfg.scenarios);
    }
    if (name == "multiplier") return multiplier_report(cfg);
    if (name == "mpc") return mpc_report(cfg);
    if (name == "production") return production_report(cfg);
    if (name == "path") return path_report(cfg);
    throw ConfigError("unknown command: " + name);
}

}  // namespace fiscsim
