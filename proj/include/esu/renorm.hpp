#pragma once

// Effective coupling constants absorbing the renormalisation freedom, the
// perfect-fluid renormalised stress bookkeeping, and the closed-form
// Hadamard parametrix of the Einstein static universe.
//
//   kappa' = kappa / (1 - kappa (alpha2 m^2 + beta2 Lambda))
//   Lambda' = (Lambda - kappa (alpha1 m^4 + beta1 Lambda^2 + beta3 Lambda m^2))
//             / (1 - kappa (alpha2 m^2 + beta2 Lambda))
//   c'     = (3 alpha3 + alpha4 + alpha5) / 6
//   c1     = alpha1 m^4 + beta1 Lambda^2 + beta3 Lambda m^2
//            - R/2 (alpha2 m^2 + beta2 Lambda) - R^2/6 (3 alpha3 + alpha4 + alpha5)
//   c2     = alpha2 m^2 + beta2 Lambda + 2R/3 (3 alpha3 + alpha4 + alpha5)
//
// The parametrix at separation (dt, chi), with u0 = chi/sin(chi) and Synge
// function sigma = -dt^2/2 + a^2 chi^2/2, is
//
//   H = u0/(8 pi^2 sigma)
//     + u0 c/(16 pi^2 a^2) log(sigma_+) sum_k (c sigma / 2a^2)^k / (k!(k+1)!)
//
// whose Bessel resummation splits by the sign of c sigma: sqrt(2c sigma)
// I_1(sqrt(2c sigma)/a) continues to -sqrt(-2c sigma) J_1(sqrt(-2c sigma)/a).
// For timelike separation (sigma < 0) the epsilon prescription
// sigma_eps = sigma + i eps dt gives log(sigma_+) = log|sigma| + i pi sgn(dt),
// so H acquires an imaginary part and the full complex value is returned.

#include <cmath>
#include <complex>
#include <utility>

#include "esu/errors.hpp"
#include "esu/model.hpp"

namespace esu {

struct EffectiveConstants {
    double kappa_eff = 0.0;  // kappa'
    double lambda_eff = 0.0; // Lambda'
    double c_prime = 0.0;    // c'
    double c1 = 0.0;
    double c2 = 0.0;
};

inline EffectiveConstants effective_constants(const ModelParams& p) {
    const auto& rc = p.renorm();
    const double m2 = p.m() * p.m();
    const double La = p.Lambda();
    const double R = ricci_scalar(p);
    const double denom = 1.0 - p.kappa() * (rc.alpha[1] * m2 + rc.beta[1] * La);
    if (denom == 0.0 || !std::isfinite(1.0 / denom))
        throw singular_renormalization_error(
            "effective_constants: 1 - kappa(alpha2 m^2 + beta2 Lambda) vanishes");
    const double a345 = 3.0 * rc.alpha[2] + rc.alpha[3] + rc.alpha[4];
    EffectiveConstants e;
    e.kappa_eff = p.kappa() / denom;
    e.lambda_eff = (La - p.kappa() * (rc.alpha[0] * m2 * m2 + rc.beta[0] * La * La +
                                      rc.beta[2] * La * m2)) /
                   denom;
    e.c_prime = a345 / 6.0;
    e.c1 = rc.alpha[0] * m2 * m2 + rc.beta[0] * La * La + rc.beta[2] * La * m2 -
           0.5 * R * (rc.alpha[1] * m2 + rc.beta[1] * La) - R * R / 6.0 * a345;
    e.c2 = rc.alpha[1] * m2 + rc.beta[1] * La + 2.0 * R / 3.0 * a345;
    if (!std::isfinite(e.kappa_eff) || !std::isfinite(e.lambda_eff))
        throw singular_renormalization_error("effective_constants: non-finite result");
    return e;
}

// (E_ren, P_ren) from (E_reg, P_reg):
//   E_ren = E_reg - c^2/(32 pi^2 a^4) - c1
//   P_ren = P_reg - c^2/(32 pi^2 a^4) - c1 - c2 R / 3
inline std::pair<double, double> renormalized_energy_pressure(double e_reg,
                                                              double p_reg,
                                                              const ModelParams& p) {
    const EffectiveConstants e = effective_constants(p);
    const double a2 = p.a() * p.a();
    const double c = p.c();
    const double shift = c * c / (32.0 * M_PI * M_PI * a2 * a2) + e.c1;
    return {e_reg - shift, p_reg - shift - e.c2 * ricci_scalar(p) / 3.0};
}

namespace detail {

// sqrt(2 c sigma) I_1(sqrt(2 c sigma)/a) continued to all real 2 c sigma.
inline double bessel_branch(double two_c_sigma, double a) {
    if (two_c_sigma == 0.0) return 0.0;
    if (two_c_sigma > 0.0) {
        const double s = std::sqrt(two_c_sigma);
        return s * std::cyl_bessel_i(1.0, s / a);
    }
    const double s = std::sqrt(-two_c_sigma);
    return -s * std::cyl_bessel_j(1.0, s / a);
}

}  // namespace detail

// Hadamard parametrix at real separation.  Returns (real, imaginary); the
// imaginary part is non-zero only for timelike sigma < 0.
inline std::complex<double> hadamard_parametrix(const ModelParams& p, double dt,
                                                double chi) {
    if (!(chi >= 0.0) || chi >= M_PI)
        throw std::domain_error("hadamard_parametrix: chi must lie in [0, pi)");
    const double a = p.a();
    const double sigma = -0.5 * dt * dt + 0.5 * a * a * chi * chi;
    if ((dt == 0.0 && chi == 0.0) || sigma == 0.0)
        throw singular_support_error(
            "hadamard_parametrix: coincident or null separation");
    const double c = p.c();
    const double u0 = (chi == 0.0) ? 1.0 : chi / std::sin(chi);
    const double pi2 = M_PI * M_PI;
    const std::complex<double> base(u0 / (8.0 * pi2 * sigma), 0.0);
    if (c == 0.0) return base;

    const std::complex<double> log_sigma =
        sigma > 0.0 ? std::complex<double>(std::log(sigma), 0.0)
                    : std::complex<double>(std::log(-sigma),
                                           dt > 0.0 ? M_PI : -M_PI);
    const double G = detail::bessel_branch(2.0 * c * sigma, a);
    return base + u0 / (16.0 * pi2 * a * sigma) * log_sigma * G;
}

}  // namespace esu
