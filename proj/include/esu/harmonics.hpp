#pragma once

// Harmonic analysis on round spheres S^p: Gegenbauer polynomials, the
// dimension of the degree-n eigenspace of -Delta, and the integral kernel
// E_n^{(p)} of the orthogonal projection onto it,
//
//   E_n^{(p)}(chi) = (2n+p-1) Gamma((p+1)/2) / (2(p-1) pi^{(p+1)/2})
//                    * C_n^{((p-1)/2)}(cos chi) ,
//
// chi the geodesic distance on the unit sphere.  All physics paths use
// p = 3, where dim = (n+1)^2 and C_n^{(1)}(cos chi) = sin((n+1)chi)/sin(chi).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace esu {

// C_n^{(alpha)}(y) by forward three-term recurrence:
//   C_0 = 1,  C_1 = 2 alpha y,
//   (j+1) C_{j+1} = 2 (j+alpha) y C_j - (j+2alpha-1) C_{j-1} .
// For alpha = 1 this reduces to C_{j+2} = 2y C_{j+1} - C_j.  The recurrence
// is stable on [-1, 1].
inline double gegenbauer(std::size_t n, double alpha, double y) {
    if (!(y >= -1.0 && y <= 1.0))
        throw std::domain_error("gegenbauer: argument must lie in [-1, 1]");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * alpha * y;
    for (std::size_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        const double next = (2.0 * (jd + alpha) * y * cur - (jd + 2.0 * alpha - 1.0) * prev) /
                            (jd + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline double gegenbauer(std::size_t n, double y) { return gegenbauer(n, 1.0, y); }

// dim L_n^{(p)} = binom(n+p-1, n) + binom(n+p-2, n-1) for n >= 1, else 1.
// Exact integer evaluation; for p = 3 this equals (n+1)^2.
inline std::uint64_t eigenspace_dim(std::size_t n, std::size_t p) {
    if (p < 1) throw std::domain_error("eigenspace_dim: p must be >= 1");
    if (n == 0) return 1;
    if (p == 3) {
        const std::uint64_t k = static_cast<std::uint64_t>(n) + 1;
        return k * k;
    }
    auto binom = [](std::uint64_t top, std::uint64_t bot) {
        if (bot > top) return std::uint64_t{0};
        bot = std::min(bot, top - bot);
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= bot; ++i) r = r * (top - bot + i) / i;
        return r;
    };
    return binom(n + p - 1, n) + binom(n + p - 2, n - 1);
}

// Eigenvalue of -Delta_{S^p} on L_n^{(p)}.
inline std::uint64_t laplacian_eigenvalue(std::size_t n, std::size_t p) {
    if (p < 1) throw std::domain_error("laplacian_eigenvalue: p must be >= 1");
    return static_cast<std::uint64_t>(n) * (n + p - 1);
}

inline double projection_kernel(std::size_t n, std::size_t p, double chi) {
    if (p < 2) throw std::domain_error("projection_kernel: p must be >= 2");
    if (!(chi >= 0.0 && chi <= M_PI))
        throw std::domain_error("projection_kernel: chi must lie in [0, pi]");
    const double pd = static_cast<double>(p);
    const double nd = static_cast<double>(n);
    const double norm = (2.0 * nd + pd - 1.0) * std::tgamma(0.5 * (pd + 1.0)) /
                        (2.0 * (pd - 1.0) * std::pow(M_PI, 0.5 * (pd + 1.0)));
    return norm * gegenbauer(n, 0.5 * (pd - 1.0), std::cos(chi));
}

}  // namespace esu
