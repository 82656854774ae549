#pragma once

// Physical parameters of a real scalar field on the Einstein static universe
// R x S^3 with metric -dt^2 + a^2 h (h the round unit three-sphere metric).
//
// The spatial operator A = -Delta_h + m^2 a^2 + 6 xi has eigenvalues
// l_n^2 = n(n+2) + m^2 a^2 + 6 xi = (n+1)^2 + c with degeneracy (n+1)^2,
// where
//
//     c := m^2 a^2 + 6 xi - 1 .
//
// Everything downstream requires c > -1 (equivalently m^2 + xi R > 0, which
// guarantees a ground state); construction rejects anything else.
//
// Units: all inputs are pure numbers in units where the Hadamard length
// scale is 1, so log(a^2/2) terms are evaluated with a as given.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "esu/errors.hpp"

namespace esu {

// Coefficients of the local curvature terms in the renormalised stress
// tensor: alpha1 m^4 g + alpha2 m^2 G + alpha3 I + alpha4 J + alpha5 K
// + beta1 Lambda^2 g + beta2 Lambda G + beta3 Lambda m^2 g.
struct RenormConstants {
    std::array<double, 5> alpha{};  // alpha1..alpha5
    std::array<double, 3> beta{};   // beta1..beta3

    bool finite() const {
        for (double v : alpha)
            if (!std::isfinite(v)) return false;
        for (double v : beta)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

class ModelParams {
public:
    // a: sphere radius (> 0), Lambda: cosmological constant, m: mass (>= 0),
    // xi: curvature coupling, kappa: 8 pi G_N (!= 0).
    ModelParams(double a, double Lambda, double m, double xi, double kappa,
                RenormConstants renorm = {})
        : a_(a), Lambda_(Lambda), m_(m), xi_(xi), kappa_(kappa), renorm_(renorm) {
        if (!(std::isfinite(a) && std::isfinite(Lambda) && std::isfinite(m) &&
              std::isfinite(xi) && std::isfinite(kappa)))
            throw std::invalid_argument("ModelParams: non-finite input");
        if (!renorm.finite())
            throw std::invalid_argument("ModelParams: non-finite renormalisation constant");
        if (a <= 0.0) throw std::domain_error("ModelParams: radius a must be positive");
        if (m < 0.0) throw std::domain_error("ModelParams: mass m must be non-negative");
        if (kappa == 0.0) throw std::domain_error("ModelParams: kappa must be non-zero");
        if (!(c() > -1.0))
            throw std::domain_error("ModelParams: c = m^2 a^2 + 6 xi - 1 must exceed -1");
    }

    double a() const { return a_; }
    double Lambda() const { return Lambda_; }
    double m() const { return m_; }
    double xi() const { return xi_; }
    double kappa() const { return kappa_; }
    const RenormConstants& renorm() const { return renorm_; }

    double c() const { return m_ * m_ * a_ * a_ + 6.0 * xi_ - 1.0; }

private:
    double a_, Lambda_, m_, xi_, kappa_;
    RenormConstants renorm_;
};

struct CurvatureData {
    double R;    // Ricci scalar 6/a^2
    double G00;  // energy component of the Einstein tensor, 3/a^2 = R/2
};

inline double coupling_c(const ModelParams& p) { return p.c(); }

inline double ricci_scalar(const ModelParams& p) { return 6.0 / (p.a() * p.a()); }

inline CurvatureData curvature(const ModelParams& p) {
    const double R = ricci_scalar(p);
    return CurvatureData{R, 0.5 * R};
}

// l_n = sqrt((n+1)^2 + c), strictly positive and strictly increasing in n.
inline double mode_frequency(double c, std::size_t n) {
    const double k = static_cast<double>(n) + 1.0;
    return std::sqrt(k * k + c);
}

inline double mode_frequency(const ModelParams& p, std::size_t n) {
    return mode_frequency(p.c(), n);
}

}  // namespace esu
