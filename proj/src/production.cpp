#include "fiscsim/production.hpp"

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

ProductionParams ProductionParams::with_sigma(double z, double alpha_k, double alpha_l,
                                              double alpha_p, double sigma_prod) {
    ProductionParams p{z, alpha_k, alpha_l, alpha_p, sigma_prod,
                       (sigma_prod - 1.0) / sigma_prod};
    validate(p);
    return p;
}

void validate(const ProductionParams& p) {
    if (!(p.z > 0.0)) fail("z", "must be > 0", p.z);
    if (!(p.alpha_k > 0.0)) fail("alpha_k", "must be > 0", p.alpha_k);
    if (!(p.alpha_l > 0.0)) fail("alpha_l", "must be > 0", p.alpha_l);
    if (!(p.alpha_p > 0.0)) fail("alpha_p", "must be > 0", p.alpha_p);
    const double sum = p.alpha_k + p.alpha_l + p.alpha_p;
    if (std::abs(sum - 1.0) > 1e-12)
        fail("alpha_k + alpha_l + alpha_p", "must sum to 1 within 1e-12", sum);
    if (!(p.sigma_prod > 0.0)) fail("sigma_prod", "must be > 0", p.sigma_prod);
    if (p.sigma_prod == 1.0) fail("sigma_prod", "must differ from 1 (rho would vanish)", 1.0);
    const double rho = (p.sigma_prod - 1.0) / p.sigma_prod;
    if (std::abs(p.rho - rho) > 1e-12)
        fail("rho", "must equal (sigma_prod - 1)/sigma_prod within 1e-12", p.rho);
}

void validate(const FactorBundle& f) {
    if (!(f.k > 0.0)) fail("k", "must be > 0", f.k);
    if (!(f.l > 0.0)) fail("l", "must be > 0", f.l);
    if (!(f.kp > 0.0)) fail("kp", "must be > 0", f.kp);
}

double output(const FactorBundle& f, const ProductionParams& p) {
    validate(p);
    validate(f);
    const double bracket = p.alpha_k * std::pow(f.k, p.rho) + p.alpha_l * std::pow(f.l, p.rho) +
                           p.alpha_p * std::pow(f.kp, p.rho);
    return p.z * std::pow(bracket, 1.0 / p.rho);
}

MarginalProducts marginal_products(const FactorBundle& f, const ProductionParams& p) {
    const double y = output(f, p);
    const double zr = std::pow(p.z, p.rho);
    const double e = 1.0 - p.rho;
    return {p.alpha_k * zr * std::pow(y / f.k, e), p.alpha_l * zr * std::pow(y / f.l, e),
            p.alpha_p * zr * std::pow(y / f.kp, e)};
}

FactorShares factor_shares(const FactorBundle& f, const ProductionParams& p) {
    const double y = output(f, p);
    const MarginalProducts m = marginal_products(f, p);
    return {f.k * m.mpk / y, f.l * m.mpl / y, f.kp * m.mpkp / y};
}

namespace {

// d2Y/dx dKP = alpha_x * alpha_p * Z^(2 rho) * (1-rho) * Y^(1-2 rho)
//              * x^(rho-1) * KP^(rho-1), for x in {K, L}.
double cross_partial(double alpha_x, double x, const FactorBundle& f,
                     const ProductionParams& p) {
    const double y = output(f, p);
    return alpha_x * p.alpha_p * std::pow(p.z, 2.0 * p.rho) * (1.0 - p.rho) *
           std::pow(y, 1.0 - 2.0 * p.rho) * std::pow(x, p.rho - 1.0) *
           std::pow(f.kp, p.rho - 1.0);
}

}  // namespace

double cross_partial_k_kp(const FactorBundle& f, const ProductionParams& p) {
    return cross_partial(p.alpha_k, f.k, f, p);
}

double cross_partial_l_kp(const FactorBundle& f, const ProductionParams& p) {
    return cross_partial(p.alpha_l, f.l, f, p);
}

}  // namespace fiscsim
