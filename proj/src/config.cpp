#include "fiscsim/config.hpp"

#include <initializer_list>
#include <utility>

#include "fiscsim/errors.hpp"

namespace fiscsim {

using nlohmann::ordered_json;

namespace {

// Wraps one section object: membership-checked reads, unknown-key rejection,
// and DomainError translation so every failure carries the key path.
class Section {
public:
    Section(const ordered_json& parent, std::string name)
        : name_(std::move(name)), present_(parent.contains(name_)) {
        if (!present_) return;
        obj_ = parent.at(name_);
        if (!obj_.is_object()) throw ConfigError(name_ + ": must be an object");
    }

    bool present() const { return present_; }

    void allow_only(std::initializer_list<const char*> keys) const {
        if (!present_) return;
        for (const auto& item : obj_.items()) {
            bool known = false;
            for (const char* k : keys) known = known || item.key() == k;
            if (!known) throw ConfigError("unknown key: " + name_ + "." + item.key());
        }
    }

    void read(const char* key, double& into) const {
        if (!present_ || !obj_.contains(key)) return;
        const ordered_json& v = obj_.at(key);
        if (!v.is_number()) throw ConfigError(name_ + "." + key + ": must be a number");
        into = v.get<double>();
    }

    void read(const char* key, bool& into) const {
        if (!present_ || !obj_.contains(key)) return;
        const ordered_json& v = obj_.at(key);
        if (!v.is_boolean()) throw ConfigError(name_ + "." + key + ": must be a boolean");
        into = v.get<bool>();
    }

    bool has(const char* key) const { return present_ && obj_.contains(key); }

    template <class Fn>
    void validate_with(Fn&& fn) const {
        try {
            fn();
        } catch (const DomainError& err) {
            throw ConfigError(name_ + ": " + err.what());
        }
    }

private:
    std::string name_;
    bool present_;
    ordered_json obj_;
};

void reject_unknown_top_level(const ordered_json& doc) {
    static const char* known[] = {"production", "household",     "policy", "elasticities",
                                  "factors",    "multiplier",    "fiscal", "path",
                                  "scenarios",  "output_format", "seed"};
    for (const auto& item : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || item.key() == k;
        if (!ok) throw ConfigError("unknown key: " + item.key());
    }
}

std::vector<ScenarioImpulse> parse_scenarios(const ordered_json& doc) {
    std::vector<ScenarioImpulse> out;
    const ordered_json& arr = doc.at("scenarios");
    if (!arr.is_array()) throw ConfigError("scenarios: must be an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "scenarios[" + std::to_string(i) + "]";
        const ordered_json& item = arr.at(i);
        if (!item.is_object()) throw ConfigError(where + ": must be an object");
        ScenarioImpulse imp;
        imp.label = "S" + std::to_string(i + 1);
        for (const auto& kv : item.items()) {
            const std::string& key = kv.key();
            if (key == "label") {
                if (!kv.value().is_string()) throw ConfigError(where + ".label: must be a string");
                imp.label = kv.value().get<std::string>();
            } else if (key == "g_c_hat" || key == "g_i_hat" || key == "q_hat" || key == "b_hat") {
                if (!kv.value().is_number())
                    throw ConfigError(where + "." + key + ": must be a number");
                const double v = kv.value().get<double>();
                if (key == "g_c_hat") imp.g_c_hat = v;
                if (key == "g_i_hat") imp.g_i_hat = v;
                if (key == "q_hat") imp.q_hat = v;
                if (key == "b_hat") imp.b_hat = v;
            } else {
                throw ConfigError("unknown key: " + where + "." + key);
            }
        }
        try {
            validate(imp);
        } catch (const DomainError& err) {
            throw ConfigError(where + ": " + err.what());
        }
        out.push_back(std::move(imp));
    }
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ConfigError(std::string("config parse error: ") + err.what());
    }
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    reject_unknown_top_level(doc);

    RunConfig cfg;
    auto note_if_absent = [&cfg](const Section& s, const char* name) {
        if (!s.present()) cfg.notes.push_back(std::string("defaulted: ") + name);
    };

    Section production(doc, "production");
    production.allow_only({"z", "alpha_k", "alpha_l", "alpha_p", "sigma_prod"});
    double z = cfg.production.z, ak = cfg.production.alpha_k, al = cfg.production.alpha_l,
           ap = cfg.production.alpha_p, sigma = cfg.production.sigma_prod;
    production.read("z", z);
    production.read("alpha_k", ak);
    production.read("alpha_l", al);
    production.read("alpha_p", ap);
    production.read("sigma_prod", sigma);
    production.validate_with(
        [&] { cfg.production = ProductionParams::with_sigma(z, ak, al, ap, sigma); });
    note_if_absent(production, "production");

    Section household(doc, "household");
    household.allow_only({"beta", "sigma_c", "gamma", "phi", "c_min", "lambda"});
    household.read("beta", cfg.household.beta);
    household.read("sigma_c", cfg.household.sigma_c);
    household.read("gamma", cfg.household.gamma);
    household.read("phi", cfg.household.phi);
    household.read("c_min", cfg.household.c_min);
    household.read("lambda", cfg.household.lambda);
    household.validate_with([&] { validate(cfg.household); });
    note_if_absent(household, "household");

    Section policy(doc, "policy");
    policy.allow_only(
        {"rho_eq", "pi_star", "phi_pi", "phi_y", "y_pot", "delta_p", "rho_omega", "sigma_omega"});
    policy.read("rho_eq", cfg.policy.rho_eq);
    policy.read("pi_star", cfg.policy.pi_star);
    policy.read("phi_pi", cfg.policy.phi_pi);
    policy.read("phi_y", cfg.policy.phi_y);
    policy.read("y_pot", cfg.policy.y_pot);
    policy.read("delta_p", cfg.policy.delta_p);
    policy.read("rho_omega", cfg.policy.rho_omega);
    policy.read("sigma_omega", cfg.policy.sigma_omega);
    policy.validate_with([&] { validate(cfg.policy); });
    note_if_absent(policy, "policy");

    Section elasticities(doc, "elasticities");
    elasticities.allow_only({"m_gc", "m_gi", "eta", "chi"});
    elasticities.read("m_gc", cfg.elasticities.m_gc);
    elasticities.read("m_gi", cfg.elasticities.m_gi);
    elasticities.read("eta", cfg.elasticities.eta);
    elasticities.read("chi", cfg.elasticities.chi);
    elasticities.validate_with([&] { validate(cfg.elasticities); });
    note_if_absent(elasticities, "elasticities");

    Section factors(doc, "factors");
    factors.allow_only({"k", "l", "kp"});
    factors.read("k", cfg.factors.k);
    factors.read("l", cfg.factors.l);
    factors.read("kp", cfg.factors.kp);
    factors.validate_with([&] { validate(cfg.factors); });
    note_if_absent(factors, "factors");

    Section multiplier(doc, "multiplier");
    multiplier.allow_only({"mpi", "b_slope"});
    multiplier.read("mpi", cfg.mpi);
    multiplier.read("b_slope", cfg.b_slope);
    multiplier.validate_with([&] {
        if (!(cfg.mpi >= 0.0)) throw DomainError("mpi must be >= 0");
        if (!(cfg.b_slope >= 0.0)) throw DomainError("b_slope must be >= 0");
    });
    note_if_absent(multiplier, "multiplier");

    Section fiscal(doc, "fiscal");
    fiscal.allow_only({"g_c", "g_i", "tr", "tax", "b_prev", "r_prev"});
    fiscal.read("g_c", cfg.fiscal.g_c);
    fiscal.read("g_i", cfg.fiscal.g_i);
    fiscal.read("tr", cfg.fiscal.tr);
    fiscal.read("tax", cfg.fiscal.tax);
    fiscal.read("b_prev", cfg.fiscal.b_prev);
    fiscal.read("r_prev", cfg.fiscal.r_prev);
    fiscal.validate_with([&] { validate(cfg.fiscal); });
    note_if_absent(fiscal, "fiscal");

    Section path(doc, "path");
    path.allow_only({"debt_from_accounts", "kp0", "omega0"});
    path.read("debt_from_accounts", cfg.path.debt_from_accounts);
    if (path.has("kp0"))
        path.read("kp0", cfg.path.kp0);
    else
        cfg.path.kp0 = cfg.fiscal.g_i / cfg.policy.delta_p;  // law-of-motion fixed point
    path.read("omega0", cfg.path.omega0);
    path.validate_with([&] {
        if (!(cfg.path.kp0 >= 0.0)) throw DomainError("kp0 must be >= 0");
    });
    note_if_absent(path, "path");

    if (doc.contains("scenarios") && !doc.at("scenarios").is_array())
        throw ConfigError("scenarios: must be an array");
    if (doc.contains("scenarios") && !doc.at("scenarios").empty()) {
        cfg.scenarios = parse_scenarios(doc);
    } else {
        cfg.notes.push_back("defaulted: scenarios (8 built-in stabilization scenarios)");
    }

    if (doc.contains("output_format")) {
        const ordered_json& v = doc.at("output_format");
        if (!v.is_string()) throw ConfigError("output_format: must be a string");
        cfg.output_format = v.get<std::string>();
        if (cfg.output_format != "csv" && cfg.output_format != "json" &&
            cfg.output_format != "markdown")
            throw ConfigError("output_format: must be one of csv, json, markdown (got " +
                              cfg.output_format + ")");
    }

    if (doc.contains("seed")) {
        const ordered_json& v = doc.at("seed");
        const bool non_negative_integer =
            v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
        if (!non_negative_integer) throw ConfigError("seed: must be a non-negative integer");
        cfg.seed = v.get<std::uint64_t>();
    }

    return cfg;
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json doc;
    doc["production"] = {{"z", cfg.production.z},
                         {"alpha_k", cfg.production.alpha_k},
                         {"alpha_l", cfg.production.alpha_l},
                         {"alpha_p", cfg.production.alpha_p},
                         {"sigma_prod", cfg.production.sigma_prod}};
    doc["household"] = {{"beta", cfg.household.beta},   {"sigma_c", cfg.household.sigma_c},
                        {"gamma", cfg.household.gamma}, {"phi", cfg.household.phi},
                        {"c_min", cfg.household.c_min}, {"lambda", cfg.household.lambda}};
    doc["policy"] = {{"rho_eq", cfg.policy.rho_eq},       {"pi_star", cfg.policy.pi_star},
                     {"phi_pi", cfg.policy.phi_pi},       {"phi_y", cfg.policy.phi_y},
                     {"y_pot", cfg.policy.y_pot},         {"delta_p", cfg.policy.delta_p},
                     {"rho_omega", cfg.policy.rho_omega}, {"sigma_omega", cfg.policy.sigma_omega}};
    doc["elasticities"] = {{"m_gc", cfg.elasticities.m_gc},
                           {"m_gi", cfg.elasticities.m_gi},
                           {"eta", cfg.elasticities.eta},
                           {"chi", cfg.elasticities.chi}};
    doc["factors"] = {{"k", cfg.factors.k}, {"l", cfg.factors.l}, {"kp", cfg.factors.kp}};
    doc["multiplier"] = {{"mpi", cfg.mpi}, {"b_slope", cfg.b_slope}};
    doc["fiscal"] = {{"g_c", cfg.fiscal.g_c},       {"g_i", cfg.fiscal.g_i},
                     {"tr", cfg.fiscal.tr},         {"tax", cfg.fiscal.tax},
                     {"b_prev", cfg.fiscal.b_prev}, {"r_prev", cfg.fiscal.r_prev}};
    doc["path"] = {{"debt_from_accounts", cfg.path.debt_from_accounts},
                   {"kp0", cfg.path.kp0},
                   {"omega0", cfg.path.omega0}};
    if (!cfg.scenarios.empty()) {
        ordered_json arr = ordered_json::array();
        for (const ScenarioImpulse& imp : cfg.scenarios)
            arr.push_back({{"label", imp.label},
                           {"g_c_hat", imp.g_c_hat},
                           {"g_i_hat", imp.g_i_hat},
                           {"q_hat", imp.q_hat},
                           {"b_hat", imp.b_hat}});
        doc["scenarios"] = std::move(arr);
    }
    doc["output_format"] = cfg.output_format;
    doc["seed"] = cfg.seed;
    return doc;
}

std::string serialize_config(const RunConfig& cfg) { return config_json(cfg).dump(2) + "\n"; }

}  // namespace fiscsim
