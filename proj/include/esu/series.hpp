#pragma once

// Certified evaluation of the renormalisation constants
//
//   X1 = -(1+6c)/12  + sum_{k>=1} [ k^2/l - k + c/(2k) ]
//   X2 = (1+10c-15c^2)/120 + sum_{k>=1} [ k^2 l - k^3 - (c/2) k + c^2/(8k) ]
//
// with k = n+1, l = sqrt(k^2 + c), and of the coincidence-limit moments of
// the ground state built from them.
//
// The raw summands lose all significant digits at large k (the bracketed
// difference is ~ k^-3 while the individual terms are ~ k), so they are
// evaluated through the exactly equivalent cancellation-free forms
//
//   k^2/l - k + c/(2k)            =  c^2 (2k + l) / (2 k l (k+l)^2)
//   k^2 l - k^3 - (c/2)k + c^2/8k =  c^3 (3k + l) / (8 k (k+l)^3) .
//
// Large-k behaviour: 3c^2/(8k^3) - 5c^3/(16k^5) + O(k^-7) for X1 and
// c^3/(16k^3) - 5c^4/(128k^5) + O(k^-7) for X2.  Raw terms are summed up to
// an adaptively chosen index, the k^-3 tail is added in closed form via
// Euler-Maclaurin, and the magnitude of the k^-5 tail is reported as the
// certified tail bound.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "esu/model.hpp"

namespace esu {

struct SeriesValue {
    double value = 0.0;
    std::size_t n_used = 0;    // number of raw terms summed (indices n = 0 .. n_used-1)
    double tail_bound = 0.0;   // certified bound on |true sum - value|
};

namespace detail {

// sum_{k >= M} k^-3 and k^-5 by Euler-Maclaurin; absolute error below
// 1e-16 for M >= 16.
inline double tail_sum_pow3(double M) {
    const double M2 = M * M;
    return 1.0 / (2.0 * M2) + 1.0 / (2.0 * M2 * M) + 1.0 / (4.0 * M2 * M2) -
           1.0 / (12.0 * M2 * M2 * M2);
}
inline double tail_sum_pow5(double M) {
    const double M2 = M * M;
    const double M4 = M2 * M2;
    return 1.0 / (4.0 * M4) + 1.0 / (2.0 * M4 * M) + 5.0 / (12.0 * M4 * M2) -
           7.0 / (24.0 * M4 * M4);
}

// Smallest first-omitted index M >= 32 with bound_coeff * S5(M) <= tol.
inline std::size_t adaptive_cutoff(double bound_coeff, double tol) {
    std::size_t lo = 32, hi = 200000000;
    if (bound_coeff * tail_sum_pow5(static_cast<double>(lo)) <= tol) return lo;
    while (lo + 1 < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (bound_coeff * tail_sum_pow5(static_cast<double>(mid)) <= tol)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace detail

// X1(c).  tol is the requested absolute accuracy of the certified tail;
// min_terms forces at least that many raw terms (used by consistency tests).
inline SeriesValue x1(double c, double tol = 1e-12, std::size_t min_terms = 0) {
    if (!(c > -1.0)) throw std::domain_error("x1: requires c > -1");
    const double bound_coeff = 5.0 * std::abs(c * c * c) / 16.0;
    std::size_t M = detail::adaptive_cutoff(bound_coeff, tol);
    M = std::max(M, min_terms + 1);
    double s = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
        const double kd = static_cast<double>(k);
        const double l = std::sqrt(kd * kd + c);
        const double kl = kd + l;
        s += c * c * (2.0 * kd + l) / (2.0 * kd * l * kl * kl);
    }
    const double Md = static_cast<double>(M);
    SeriesValue r;
    r.value = -(1.0 + 6.0 * c) / 12.0 + s +
              (3.0 * c * c / 8.0) * detail::tail_sum_pow3(Md);
    r.n_used = M - 1;
    r.tail_bound = bound_coeff * detail::tail_sum_pow5(Md);
    return r;
}

// X2(c), same contract as x1.
inline SeriesValue x2(double c, double tol = 1e-12, std::size_t min_terms = 0) {
    if (!(c > -1.0)) throw std::domain_error("x2: requires c > -1");
    const double c2 = c * c;
    const double bound_coeff = 5.0 * c2 * c2 / 128.0;
    std::size_t M = detail::adaptive_cutoff(bound_coeff, tol);
    M = std::max(M, min_terms + 1);
    double s = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
        const double kd = static_cast<double>(k);
        const double l = std::sqrt(kd * kd + c);
        const double kl = kd + l;
        s += c * c2 * (3.0 * kd + l) / (8.0 * kd * kl * kl * kl);
    }
    const double Md = static_cast<double>(M);
    SeriesValue r;
    r.value = (1.0 + 10.0 * c - 15.0 * c2) / 120.0 + s +
              (c * c2 / 16.0) * detail::tail_sum_pow3(Md);
    r.n_used = M - 1;
    r.tail_bound = bound_coeff * detail::tail_sum_pow5(Md);
    return r;
}

// Coincidence-limit moments of the ground state's regularised two-point
// kernel (omega2 - H restricted to the diagonal and its double time
// derivative there):
//
//   m0 = -c/(16 pi^2 a^2) log(a^2/2) + X1/(4 pi^2 a^2)
//   m2 = -c^2/(64 pi^2 a^4) (3 + log(a^2/2)) + X2/(4 pi^2 a^4)
inline std::pair<double, double> ground_moments(const ModelParams& p,
                                                double tol = 1e-12) {
    const double a = p.a();
    const double c = p.c();
    const double a2 = a * a;
    const double L = std::log(0.5 * a2);
    const double X1 = x1(c, tol).value;
    const double X2 = x2(c, tol).value;
    const double pi2 = M_PI * M_PI;
    const double m0 = -c / (16.0 * pi2 * a2) * L + X1 / (4.0 * pi2 * a2);
    const double m2 = -c * c / (64.0 * pi2 * a2 * a2) * (3.0 + L) +
                      X2 / (4.0 * pi2 * a2 * a2);
    return {m0, m2};
}

}  // namespace esu
