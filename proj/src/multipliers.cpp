#include "fiscsim/multipliers.hpp"

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

[[noreturn]] void divergent(double slack) {
    std::ostringstream os;
    os << "divergent multiplier: 1 - mpc_agg - mpi must be positive (got " << slack << ")";
    throw ConvergenceError(os.str());
}

// Positive root of mpi*kappa*m^2 + slack*m - numerator = 0, evaluated as
// 2*numerator/(slack + sqrt(disc)) so the kappa -> 0 limit needs no
// cancellation-prone subtraction.
double solve(const MultiplierInputs& m, double numerator) {
    validate(m);
    const double slack = 1.0 - m.mpc_agg - m.mpi;
    if (!(slack > 0.0)) divergent(slack);
    const double a = m.mpi * m.kappa;
    if (a == 0.0) return numerator / slack;
    const double disc = slack * slack + 4.0 * a * numerator;
    return 2.0 * numerator / (slack + std::sqrt(disc));
}

}  // namespace

void validate(const MultiplierInputs& m) {
    if (!(m.mpc_agg > 0.0 && m.mpc_agg < 1.0)) fail("mpc_agg", "must lie in (0,1)", m.mpc_agg);
    if (!(m.mpi >= 0.0)) fail("mpi", "must be >= 0", m.mpi);
    if (!(m.mpk_p >= 0.0)) fail("mpk_p", "must be >= 0", m.mpk_p);
    if (!(m.kappa >= 0.0)) fail("kappa", "must be >= 0", m.kappa);
}

double investment_multiplier(const MultiplierInputs& m) { return solve(m, 1.0 + m.mpk_p); }

double consumption_multiplier(const MultiplierInputs& m) { return solve(m, 1.0); }

double fixed_point_multiplier(const MultiplierInputs& m, double numerator) {
    validate(m);
    const double slack = 1.0 - m.mpc_agg - m.mpi;
    if (!(slack > 0.0)) divergent(slack);
    double value = numerator / slack;
    for (int i = 0; i < 500; ++i) {
        const double denom = slack + m.mpi * m.kappa * value;
        if (!(denom > 0.0)) divergent(denom);
        const double next = numerator / denom;
        if (std::abs(next - value) <= 1e-15 * std::abs(next)) return next;
        value = next;
    }
    std::ostringstream os;
    os << "multiplier fixed point did not settle within 500 iterations (last " << value << ")";
    throw ConvergenceError(os.str());
}

double regime_kappa(double pi, double y, const PolicyParams& p, double b_slope) {
    if (!(b_slope >= 0.0)) fail("b_slope", "must be >= 0", b_slope);
    if (is_zlb(pi, y, p)) return 0.0;
    if (!(1.0 + pi > 0.0)) fail("pi", "must exceed -1", pi);
    return b_slope * p.phi_y / (p.y_pot * (1.0 + pi));
}

}  // namespace fiscsim
