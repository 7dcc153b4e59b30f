#include "fiscsim/policy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fiscsim/errors.hpp"

namespace fiscsim {

namespace {

[[noreturn]] void fail(const char* field, const char* requirement, double got) {
    std::ostringstream os;
    os << field << " " << requirement << " (got " << got << ")";
    throw DomainError(os.str());
}

double taylor_unclamped(double pi, double y, const PolicyParams& p) {
    validate(p);
    if (!(y > 0.0)) fail("y", "must be > 0", y);
    return p.rho_eq + p.pi_star + p.phi_pi * (pi - p.pi_star) +
           p.phi_y * (y - p.y_pot) / p.y_pot;
}

}  // namespace

void validate(const PolicyParams& p) {
    if (!(p.y_pot > 0.0)) fail("y_pot", "must be > 0", p.y_pot);
    if (!(p.phi_pi >= 0.0)) fail("phi_pi", "must be >= 0", p.phi_pi);
    if (!(p.phi_y >= 0.0)) fail("phi_y", "must be >= 0", p.phi_y);
    if (!(p.delta_p > 0.0 && p.delta_p < 1.0)) fail("delta_p", "must lie in (0,1)", p.delta_p);
    if (!(p.rho_omega >= 0.0 && p.rho_omega < 1.0))
        fail("rho_omega", "must lie in [0,1)", p.rho_omega);
    if (!(p.sigma_omega >= 0.0)) fail("sigma_omega", "must be >= 0", p.sigma_omega);
}

void validate(const FiscalState& f) {
    if (!(f.g_c >= 0.0)) fail("g_c", "must be >= 0", f.g_c);
    if (!(f.g_i >= 0.0)) fail("g_i", "must be >= 0", f.g_i);
    if (!(f.tr >= 0.0)) fail("tr", "must be >= 0", f.tr);
    if (!(f.tax >= 0.0)) fail("tax", "must be >= 0", f.tax);
    if (!std::isfinite(f.b_prev)) fail("b_prev", "must be finite", f.b_prev);
}

double taylor_rate(double pi, double y, const PolicyParams& p) {
    return std::max(0.0, taylor_unclamped(pi, y, p));
}

bool is_zlb(double pi, double y, const PolicyParams& p) {
    return taylor_unclamped(pi, y, p) <= 0.0;
}

double fisher_real_rate(double i, double e_pi) {
    if (!(1.0 + e_pi > 0.0)) fail("e_pi", "must exceed -1", e_pi);
    return (1.0 + i) / (1.0 + e_pi) - 1.0;
}

double public_capital_step(double kp, double g_i, const PolicyParams& p) {
    validate(p);
    if (!(kp >= 0.0)) fail("kp", "must be >= 0", kp);
    if (!(g_i >= 0.0)) fail("g_i", "must be >= 0", g_i);
    return (1.0 - p.delta_p) * kp + g_i;
}

DebtStep debt_step(const FiscalState& f) {
    validate(f);
    const double level = f.g_c + f.g_i + f.tr + (1.0 + f.r_prev) * f.b_prev - f.tax;
    return {level, level < 0.0};
}

double expectation(double model_exp, double omega) { return model_exp + omega; }

double sentiment_step(double omega_prev, double innovation, const PolicyParams& p) {
    validate(p);
    return p.rho_omega * omega_prev + p.sigma_omega * innovation;
}

}  // namespace fiscsim
