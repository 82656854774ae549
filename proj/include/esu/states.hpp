#pragma once

// Symmetric quasi-free states.  Every symmetric two-point distribution is
// the ground state plus a non-negative mode correction:
//
//   omega2 = omega2_ground
//          + sum_n a_n/(n+1) cos(dt l_n / a) C_n^{(1)}(cos chi),  a_n >= 0 .
//
// A state is Ground (a_n = 0), KMS at inverse temperature beta with
//
//   a_n^{(beta)} = (n+1)^2/(2 pi^2 a^3) (a/l_n) e^{-beta l_n/a}/(1-e^{-beta l_n/a}),
//
// or a finite set of explicit mode coefficients.  The two scalar moments
//
//   sum_a   = sum_n a_n              sum_al2 = sum_n a_n l_n^2 / a^2
//
// carry all of the state dependence of the regularised energy and pressure:
//
//   E_reg = (m2 + sum_al2) + 3c^2/(64 pi^2 a^4)
//   P_reg = (m^2 (m0 + sum_a) - (m2 + sum_al2))/3 + c^2/(64 pi^2 a^4)
//
// with (m0, m2) the ground-state moments of series.hpp.

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "esu/errors.hpp"
#include "esu/model.hpp"
#include "esu/renorm.hpp"
#include "esu/series.hpp"

namespace esu {

inline double kms_coefficient(const ModelParams& p, double beta, std::size_t n) {
    if (!(beta > 0.0)) throw std::domain_error("kms_coefficient: beta must be positive");
    const double a = p.a();
    const double l = mode_frequency(p, n);
    const double k = static_cast<double>(n) + 1.0;
    const double x = std::exp(-beta * l / a);
    return k * k / (2.0 * M_PI * M_PI * a * a * l) * x / (1.0 - x);
}

class SymmetricState {
public:
    enum class Kind { ground, kms, modes };

    static SymmetricState ground() { return SymmetricState(Kind::ground, 0.0, {}); }

    static SymmetricState kms(double beta) {
        if (!(beta > 0.0)) throw std::domain_error("SymmetricState: KMS beta must be positive");
        return SymmetricState(Kind::kms, beta, {});
    }

    // Zero entries are dropped; negative entries are rejected.
    static SymmetricState modes(std::map<std::size_t, double> coeffs) {
        for (auto it = coeffs.begin(); it != coeffs.end();) {
            if (it->second < 0.0)
                throw std::domain_error("SymmetricState: mode coefficients must be >= 0");
            if (it->second == 0.0)
                it = coeffs.erase(it);
            else
                ++it;
        }
        return SymmetricState(Kind::modes, 0.0, std::move(coeffs));
    }

    Kind kind() const { return kind_; }
    double beta() const { return beta_; }
    const std::map<std::size_t, double>& coeffs() const { return coeffs_; }

    // a_n for any n (generated on demand for KMS states).
    double coefficient(const ModelParams& p, std::size_t n) const {
        switch (kind_) {
            case Kind::ground: return 0.0;
            case Kind::kms: return kms_coefficient(p, beta_, n);
            case Kind::modes: {
                auto it = coeffs_.find(n);
                return it == coeffs_.end() ? 0.0 : it->second;
            }
        }
        return 0.0;
    }

private:
    SymmetricState(Kind k, double beta, std::map<std::size_t, double> coeffs)
        : kind_(k), beta_(beta), coeffs_(std::move(coeffs)) {}

    Kind kind_;
    double beta_;
    std::map<std::size_t, double> coeffs_;
};

// (sum_a, sum_al2).  KMS sums are truncated once a term drops below
// 1e-16 of the running sums.
inline std::pair<double, double> moments(const SymmetricState& s, const ModelParams& p) {
    const double a2 = p.a() * p.a();
    switch (s.kind()) {
        case SymmetricState::Kind::ground:
            return {0.0, 0.0};
        case SymmetricState::Kind::modes: {
            double sa = 0.0, sal2 = 0.0;
            for (const auto& [n, an] : s.coeffs()) {
                const double l = mode_frequency(p, n);
                sa += an;
                sal2 += an * l * l / a2;
            }
            return {sa, sal2};
        }
        case SymmetricState::Kind::kms: {
            double sa = 0.0, sal2 = 0.0;
            for (std::size_t n = 0;; ++n) {
                const double an = kms_coefficient(p, s.beta(), n);
                const double l = mode_frequency(p, n);
                const double t2 = an * l * l / a2;
                sa += an;
                sal2 += t2;
                if (n > 8 && an < 1e-16 * sa && t2 < 1e-16 * sal2) break;
            }
            return {sa, sal2};
        }
    }
    return {0.0, 0.0};
}

// Regulated two-point value at separation (dt, chi).  The ground part is the
// mode sum with regulator eps; terms with n <= n_max use the exact l_n and
// the remainder is completed analytically with the conformal asymptotics
// l_n -> n+1, whose error is exponentially below the geometric truncation
// scale e^{-eps n_max/a}/(1 - e^{-eps/a}).  The state correction is added
// exactly (no regulator).
inline std::complex<double> two_point(const SymmetricState& s, const ModelParams& p,
                                      double dt, double chi, double eps,
                                      std::size_t n_max) {
    if (!(chi >= 0.0) || chi >= M_PI)
        throw std::domain_error("two_point: chi must lie in [0, pi)");
    if (!(eps > 0.0)) throw std::domain_error("two_point: eps must be positive");

    const double a = p.a();
    const double pi2 = M_PI * M_PI;
    const std::complex<double> T(dt / a, -eps / a);
    const std::complex<double> I(0.0, 1.0);

    // C_n^{(1)}(cos chi) = sin((n+1)chi)/sin(chi), with the chi -> 0 limit n+1.
    const double sin_chi = std::sin(chi);
    auto Cn = [&](std::size_t n) {
        const double k = static_cast<double>(n) + 1.0;
        if (chi < 1e-9) return k * (1.0 - (k * k - 1.0) * chi * chi / 6.0);
        return std::sin(k * chi) / sin_chi;
    };

    std::complex<double> ground(0.0, 0.0);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double k = static_cast<double>(n) + 1.0;
        const double l = mode_frequency(p, n);
        ground += k / l * std::exp(-I * T * l) * Cn(n);
    }
    // Conformal completion of the n > n_max tail:
    //   sum_{k > n_max+1} e^{-iTk} sin(k chi)/sin(chi)
    //     = Im-combination of two geometric tails with ratios e^{i(chi - T)},
    //       e^{-i(chi + T)}.
    {
        const double N2 = static_cast<double>(n_max) + 2.0;
        if (chi < 1e-9) {
            // sin(k chi)/sin(chi) ~ k: differentiate the geometric tail instead.
            const std::complex<double> q = std::exp(-I * T);
            const std::complex<double> qN = std::pow(q, N2);
            ground += qN * (N2 * (1.0 - q) + q) / ((1.0 - q) * (1.0 - q));
        } else {
            const std::complex<double> q1 = std::exp(I * (chi - T));
            const std::complex<double> q2 = std::exp(-I * (chi + T));
            const std::complex<double> tail =
                (std::pow(q1, N2) / (1.0 - q1) - std::pow(q2, N2) / (1.0 - q2)) /
                (2.0 * I);
            ground += tail / sin_chi;
        }
    }
    ground /= 4.0 * pi2 * a * a;

    std::complex<double> corr(0.0, 0.0);
    auto state_term = [&](std::size_t n, double an) {
        const double k = static_cast<double>(n) + 1.0;
        const double l = mode_frequency(p, n);
        return an / k * std::cos(dt * l / a) * Cn(n);
    };
    switch (s.kind()) {
        case SymmetricState::Kind::ground:
            break;
        case SymmetricState::Kind::modes:
            for (const auto& [n, an] : s.coeffs()) corr += state_term(n, an);
            break;
        case SymmetricState::Kind::kms: {
            double scale = 0.0;
            for (std::size_t n = 0;; ++n) {
                const double an = kms_coefficient(p, s.beta(), n);
                scale += an;
                corr += state_term(n, an);
                if (n > 8 && an < 1e-16 * scale) break;
            }
            break;
        }
    }
    return ground + corr;
}

inline std::pair<double, double> energy_pressure_reg(const SymmetricState& s,
                                                     const ModelParams& p) {
    const auto [m0, m2] = ground_moments(p);
    const auto [sa, sal2] = moments(s, p);
    const double a2 = p.a() * p.a();
    const double c = p.c();
    const double corner = c * c / (64.0 * M_PI * M_PI * a2 * a2);
    const double e_reg = (m2 + sal2) + 3.0 * corner;
    const double p_reg = (p.m() * p.m() * (m0 + sa) - (m2 + sal2)) / 3.0 + corner;
    return {e_reg, p_reg};
}

inline std::pair<double, double> energy_pressure_ren(const SymmetricState& s,
                                                     const ModelParams& p) {
    const auto [e_reg, p_reg] = energy_pressure_reg(s, p);
    return renormalized_energy_pressure(e_reg, p_reg, p);
}

}  // namespace esu
