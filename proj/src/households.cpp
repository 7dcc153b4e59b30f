#include "fiscsim/households.hpp"

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

}  // namespace

void validate(const HouseholdParams& p) {
    if (!(p.beta > 0.0 && p.beta < 1.0)) fail("beta", "must lie in (0,1)", p.beta);
    if (!(p.sigma_c > 0.0)) fail("sigma_c", "must be > 0", p.sigma_c);
    if (!(p.gamma > 0.0)) fail("gamma", "must be > 0", p.gamma);
    if (!(p.phi >= 0.0)) fail("phi", "must be >= 0", p.phi);
    if (!(p.c_min >= 0.0)) fail("c_min", "must be >= 0", p.c_min);
    if (!(p.lambda >= 0.0 && p.lambda <= 1.0)) fail("lambda", "must lie in [0,1]", p.lambda);
}

double lc_consumption(double income) {
    if (income < 0.0) fail("income", "must be >= 0", income);
    return income;
}

double euler_residual(const WaState& s, double r, double e_term, const HouseholdParams& p) {
    validate(p);
    if (!(s.consumption > p.c_min)) fail("consumption", "must exceed c_min", s.consumption);
    if (!(s.assets_next > 0.0)) fail("assets_next", "must be > 0", s.assets_next);
    if (!(1.0 + r > 0.0)) fail("r", "must exceed -1", r);
    if (!(e_term >= 0.0)) fail("e_term", "must be >= 0", e_term);
    return std::pow(s.consumption - p.c_min, -p.sigma_c) -
           (1.0 + r) * p.phi * std::pow(s.assets_next, -p.gamma) -
           p.beta * (1.0 + r) * e_term;
}

namespace {

// Stationary Euler and budget reduce to one equation in assets A, with
// C(A) = y + r*A/(1+r):
//   g(A) = (C(A)-c_min)^(-sigma_c) * (1 - beta(1+r)) - (1+r)*phi*A^(-gamma)
// Solved in log form: h(A) = -sigma_c*ln(C-c_min) + ln(1-beta(1+r))
//                            - ln((1+r)*phi) + gamma*ln(A),
// which is strictly increasing whenever gamma >= sigma_c or r = 0.
struct SteadyStateEq {
    double y, r, bt;  // bt = beta*(1+r)
    const HouseholdParams& p;

    double consumption(double a) const { return y + r * a / (1.0 + r); }

    double h(double a) const {
        return -p.sigma_c * std::log(consumption(a) - p.c_min) + std::log(1.0 - bt) -
               std::log((1.0 + r) * p.phi) + p.gamma * std::log(a);
    }

    double h_prime(double a) const {
        return -p.sigma_c * (r / (1.0 + r)) / (consumption(a) - p.c_min) + p.gamma / a;
    }
};

[[noreturn]] void bracket_failure(const char* direction, double a, double value) {
    std::ostringstream os;
    os << "steady-state bracketing failed: no sign change while expanding " << direction
       << "; last assets " << a << ", residual " << value;
    throw ConvergenceError(os.str());
}

}  // namespace

WaState wa_steady_state(double income, double r, const HouseholdParams& p) {
    validate(p);
    if (p.phi == 0.0)
        throw DomainError(
            "phi = 0 leaves the steady state indeterminate: stationarity would "
            "require beta*(1+r) = 1 and pins down no asset level");
    if (!(1.0 + r > 0.0)) fail("r", "must exceed -1", r);
    const double bt = p.beta * (1.0 + r);
    if (!(bt < 1.0)) fail("beta*(1+r)", "must be < 1 for an interior steady state", bt);
    if (!(income > p.c_min)) fail("income", "must exceed c_min", income);

    const SteadyStateEq eq{income, r, bt, p};

    // Expand geometrically from A = income until h changes sign. h < 0 means
    // assets too low (wealth motive dominates), so the root lies above. With
    // r < 0 consumption falls in assets, bounding the domain above; h diverges
    // to +inf at that bound, so approaching it geometrically finds the root.
    const double a_max =
        r < 0.0 ? (income - p.c_min) * (1.0 + r) / (-r) : 0.0;  // 0 = unbounded
    double lo = income, hi = income;
    double h0 = eq.h(income);
    if (h0 < 0.0) {
        for (int i = 0;; ++i) {
            if (i == 200) bracket_failure("up", hi, eq.h(hi));
            double next = hi * 2.0;
            if (a_max > 0.0 && next >= a_max) next = 0.5 * (hi + a_max);
            hi = next;
            if (eq.h(hi) >= 0.0) break;
            lo = hi;
        }
    } else if (h0 > 0.0) {
        for (int i = 0;; ++i) {
            if (i == 200) bracket_failure("down", lo, eq.h(lo));
            lo *= 0.5;
            if (eq.h(lo) <= 0.0) break;
            hi = lo;
        }
    }

    // Newton on h, clipped to the bracket, with bisection as fallback.
    double a = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        const double val = eq.h(a);
        if (val > 0.0)
            hi = a;
        else if (val < 0.0)
            lo = a;
        else
            break;
        const double slope = eq.h_prime(a);
        double next = slope != 0.0 ? a - val / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - a) <= 1e-16 * a) {
            a = next;
            break;
        }
        a = next;
    }

    const double c = eq.consumption(a);
    return {a, income, c, a};
}

double mpc_closed_form(const WaState& s, double r, const HouseholdParams& p) {
    validate(p);
    if (p.phi == 0.0) return 0.0;  // wealth motive absent: the exact limit
    if (!(s.consumption > p.c_min)) fail("consumption", "must exceed c_min", s.consumption);
    if (!(s.assets_next > 0.0)) fail("assets_next", "must be > 0", s.assets_next);
    const double n = (1.0 + r) * (1.0 + r) * p.phi * p.gamma *
                     std::pow(s.assets_next, -p.gamma - 1.0);
    const double d = p.sigma_c * std::pow(s.consumption - p.c_min, -p.sigma_c - 1.0);
    return n / (d + n);
}

namespace {

// One-period response: consumption solving the Euler equation with the
// expectation term frozen and start-of-period assets fixed, against the
// period budget A_next = (1+r)*(a0 + y - C). The left side is strictly
// decreasing in C on (c_min, a0 + y), so the root is unique.
double period_response(double a0, double e_term, double y, double r,
                       const HouseholdParams& p, double guess) {
    double lo = p.c_min, hi = a0 + y;  // virtual endpoints: F -> +inf / -inf
    double c = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        const double a_next = (1.0 + r) * (a0 + y - c);
        const double f = std::pow(c - p.c_min, -p.sigma_c) -
                         (1.0 + r) * p.phi * std::pow(a_next, -p.gamma) -
                         p.beta * (1.0 + r) * e_term;
        if (f > 0.0)
            lo = c;
        else if (f < 0.0)
            hi = c;
        else
            return c;
        const double fp = -p.sigma_c * std::pow(c - p.c_min, -p.sigma_c - 1.0) -
                          (1.0 + r) * (1.0 + r) * p.phi * p.gamma *
                              std::pow(a_next, -p.gamma - 1.0);
        double next = c - f / fp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - c) <= 1e-16 * std::abs(c)) return next;
        c = next;
    }
    std::ostringstream os;
    os << "period consumption solve stalled: bracket [" << lo << ", " << hi << "], income " << y;
    throw ConvergenceError(os.str());
}

}  // namespace

double mpc_oracle(double income, double r, const HouseholdParams& p, double h) {
    if (!(h > 0.0)) fail("h", "must be > 0", h);
    const WaState base = wa_steady_state(income, r, p);
    const double e_term = std::pow(base.consumption - p.c_min, -p.sigma_c);
    const double c_up = period_response(base.assets, e_term, income + h, r, p, base.consumption);
    const double c_dn = period_response(base.assets, e_term, income - h, r, p, base.consumption);
    return (c_up - c_dn) / (2.0 * h);
}

double aggregate_mpc(double mpc_wa, const HouseholdParams& p) {
    validate(p);
    if (!(mpc_wa >= 0.0 && mpc_wa <= 1.0)) fail("mpc_wa", "must lie in [0,1]", mpc_wa);
    return p.lambda + (1.0 - p.lambda) * mpc_wa;
}

}  // namespace fiscsim
