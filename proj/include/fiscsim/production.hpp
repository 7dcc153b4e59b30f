#pragma once

namespace fiscsim {

/**
 * Three-factor CES technology
 *
 *   Y = Z * [alpha_k*K^rho + alpha_l*L^rho + alpha_p*KP^rho]^(1/rho)
 *
 * rho is stored alongside sigma_prod and must satisfy
 * rho = (sigma_prod - 1)/sigma_prod to 1e-12; use with_sigma() so the
 * conversion happens in exactly one place. sigma_prod < 1 (rho < 0) makes the
 * three factors gross complements, which signs the cross-partials below.
 */
struct ProductionParams {
    double z = 1.0;           // total factor productivity, > 0
    double alpha_k = 0.35;    // private-capital weight
    double alpha_l = 0.55;    // labor weight
    double alpha_p = 0.10;    // public-capital weight; weights sum to 1
    double sigma_prod = 0.6;  // elasticity of substitution, > 0 and != 1
    double rho = (0.6 - 1.0) / 0.6;

    // Builds params with rho derived from sigma; the only conversion point.
    static ProductionParams with_sigma(double z, double alpha_k, double alpha_l, double alpha_p,
                                       double sigma_prod);
};

struct FactorBundle {
    double k = 3.0;   // private capital, > 0
    double l = 1.0;   // labor, > 0
    double kp = 0.5;  // public capital, > 0 (CES with rho < 0 diverges at 0)
};

struct MarginalProducts {
    double mpk = 0.0;
    double mpl = 0.0;
    double mpkp = 0.0;
};

struct FactorShares {
    double s_k = 0.0;
    double s_l = 0.0;
    double s_p = 0.0;
};

// Throw DomainError naming the offending field when an invariant fails.
void validate(const ProductionParams& p);
void validate(const FactorBundle& f);

// Output level; homogeneous of degree 1 in the factor bundle.
double output(const FactorBundle& f, const ProductionParams& p);

// Analytic marginal products: MP_x = alpha_x * Z^rho * (Y/x)^(1-rho).
// Homogeneous of degree 0 in the factor bundle.
MarginalProducts marginal_products(const FactorBundle& f, const ProductionParams& p);

// s_x = x * MP_x / Y; shares are each in (0,1) and sum to 1 (Euler's theorem).
FactorShares factor_shares(const FactorBundle& f, const ProductionParams& p);

// d2Y/dK dKP, positive for every valid input: with sigma_prod < 1 a larger
// public-capital stock raises the marginal product of private capital.
double cross_partial_k_kp(const FactorBundle& f, const ProductionParams& p);

// d2Y/dL dKP, same sign structure as the K-KP cross-partial.
double cross_partial_l_kp(const FactorBundle& f, const ProductionParams& p);

}  // namespace fiscsim
