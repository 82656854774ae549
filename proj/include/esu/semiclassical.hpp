#pragma once

// The two scalar targets of the semi-classical Einstein equation on the
// Einstein static universe,
//
//   Y1 = (1/32 pi^2 a^4)(-8 m^2 a^2 X1 + c^2 + 2 m^2 a^2 c log(a^2/2))
//        + (R - 4 Lambda')/kappa'
//   Y2 = (1/64 pi^2 a^4)(-16 X2 + 2 c^2 + c^2 log(a^2/2))
//        + (R - 2 Lambda')/(2 kappa') - c' R^2 ,
//
// and the structure of its solution set: a symmetric state {a_n} solves the
// equation iff
//
//   m^2 sum_n a_n = Y1         and        sum_n a_n l_n^2 / a^2 = Y2 .
//
// The solution set is empty, the ground state alone, or infinite:
//   m = 0:  non-empty iff Y2 >= Y1 = 0 (ground iff Y2 = 0, else infinite);
//   m > 0:  ground iff Y1 = Y2 = 0; infinite iff m^2 Y2 > (m^2 + xi R) Y1 > 0;
//           the boundary m^2 Y2 = (m^2 + xi R) Y1 > 0 carries exactly one
//           quasi-free solution (a single occupied n = 0 mode) while the full
//           set of states is still infinite there.

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "esu/errors.hpp"
#include "esu/model.hpp"
#include "esu/renorm.hpp"
#include "esu/series.hpp"
#include "esu/states.hpp"

namespace esu {

struct SemiclassicalTargets {
    double y1 = 0.0;
    double y2 = 0.0;
    EffectiveConstants eff;
    ModelParams params;
};

inline SemiclassicalTargets targets(const ModelParams& p, double tol = 1e-12) {
    const EffectiveConstants eff = effective_constants(p);
    const double a = p.a();
    const double a2 = a * a;
    const double a4 = a2 * a2;
    const double c = p.c();
    const double m2a2 = p.m() * p.m() * a2;
    const double L = std::log(0.5 * a2);
    const double R = ricci_scalar(p);
    const double X1 = x1(c, tol).value;
    const double X2 = x2(c, tol).value;
    const double pi2 = M_PI * M_PI;

    SemiclassicalTargets t{0.0, 0.0, eff, p};
    t.y1 = (-8.0 * m2a2 * X1 + c * c + 2.0 * m2a2 * c * L) / (32.0 * pi2 * a4) +
           (R - 4.0 * eff.lambda_eff) / eff.kappa_eff;
    t.y2 = (-16.0 * X2 + 2.0 * c * c + c * c * L) / (64.0 * pi2 * a4) +
           (R - 2.0 * eff.lambda_eff) / (2.0 * eff.kappa_eff) -
           eff.c_prime * R * R;
    if (!std::isfinite(t.y1) || !std::isfinite(t.y2))
        throw singular_renormalization_error("targets: non-finite Y1/Y2");
    return t;
}

enum class SolutionSet { empty, unique_ground, unique_non_ground, infinite };

struct Classification {
    SolutionSet qf = SolutionSet::empty;    // quasi-free solutions
    SolutionSet full = SolutionSet::empty;  // all symmetric solutions
    // True when some comparison fell inside the tolerance window instead of
    // being an exact zero, i.e. the verdict is numerically ambiguous.
    bool boundary = false;
};

inline const char* to_string(SolutionSet s) {
    switch (s) {
        case SolutionSet::empty: return "empty";
        case SolutionSet::unique_ground: return "unique_ground";
        case SolutionSet::unique_non_ground: return "unique_non_ground";
        case SolutionSet::infinite: return "infinite";
    }
    return "?";
}

inline Classification classify(const SemiclassicalTargets& t) {
    constexpr double tau = 1e-12;
    const ModelParams& p = t.params;
    const double m2 = p.m() * p.m();
    // m^2 + xi R = (c + 1)/a^2 = l_0^2 / a^2.
    const double w = (p.c() + 1.0) / (p.a() * p.a());

    Classification r;
    bool used_window = false;
    auto is_zero = [&](double v, double scale) {
        if (v == 0.0) return true;
        if (std::abs(v) <= tau * scale) {
            used_window = true;
            return true;
        }
        return false;
    };

    if (m2 == 0.0) {
        const double scale = std::max(std::abs(t.y1), std::abs(t.y2));
        if (!is_zero(t.y1, scale)) {
            r.qf = SolutionSet::empty;
        } else if (is_zero(t.y2, scale)) {
            r.qf = SolutionSet::unique_ground;
        } else {
            r.qf = t.y2 > 0.0 ? SolutionSet::infinite : SolutionSet::empty;
        }
    } else {
        const double A = m2 * t.y2;
        const double B = w * t.y1;
        const double scale = std::max(std::abs(A), std::abs(B));
        if (is_zero(t.y1, scale / w) && is_zero(t.y2, scale / m2)) {
            r.qf = SolutionSet::unique_ground;
        } else if (t.y1 > 0.0 && is_zero(A - B, scale)) {
            r.qf = SolutionSet::unique_non_ground;
        } else if (t.y1 > 0.0 && A > B) {
            r.qf = SolutionSet::infinite;
        } else {
            r.qf = SolutionSet::empty;
        }
    }

    switch (r.qf) {
        case SolutionSet::empty: r.full = SolutionSet::empty; break;
        case SolutionSet::unique_ground: r.full = SolutionSet::unique_ground; break;
        default: r.full = SolutionSet::infinite; break;
    }
    r.boundary = used_window;
    return r;
}

// Smallest mode index usable by construct_two_mode: for m > 0 the least
// N >= 1 with l_N^2 Y1/(a^2 m^2) >= Y2; for m = 0 any index works.
inline std::size_t min_two_mode_index(const SemiclassicalTargets& t) {
    const ModelParams& p = t.params;
    const double m2 = p.m() * p.m();
    if (m2 == 0.0) return 0;
    if (!(t.y1 > 0.0))
        throw no_solution_error("min_two_mode_index: needs Y1 > 0 when m > 0");
    const double a2 = p.a() * p.a();
    // l_N^2 >= a^2 m^2 Y2 / Y1  <=>  (N+1)^2 >= a^2 m^2 Y2/Y1 - c.
    const double need = a2 * m2 * t.y2 / t.y1 - p.c();
    std::size_t N = 1;
    if (need > 4.0) N = static_cast<std::size_t>(std::ceil(std::sqrt(need) - 1.0));
    while (true) {
        const double lN = mode_frequency(p, N);
        if (lN * lN * t.y1 / (a2 * m2) >= t.y2 && N >= 1) return N;
        ++N;
    }
}

// Explicit solution with support {0, n_high} (m > 0) or {n_high} (m = 0):
//
//   a_0 = a^2/(l_N^2 - l_0^2) (l_N^2 Y1/(a^2 m^2) - Y2)
//   a_N = a^2/(l_N^2 - l_0^2) (Y2 - l_0^2 Y1/(a^2 m^2))      (m > 0)
//   a_N = a^2 Y2 / l_N^2                                     (m = 0, Y2 > 0)
inline SymmetricState construct_two_mode(const SemiclassicalTargets& t,
                                         std::size_t n_high) {
    const Classification cls = classify(t);
    if (cls.qf == SolutionSet::empty)
        throw no_solution_error("construct_two_mode: solution set is empty");
    if (cls.qf == SolutionSet::unique_ground) return SymmetricState::ground();

    const ModelParams& p = t.params;
    const double a2 = p.a() * p.a();
    const double m2 = p.m() * p.m();

    if (m2 == 0.0) {
        const double lN = mode_frequency(p, n_high);
        return SymmetricState::modes({{n_high, a2 * t.y2 / (lN * lN)}});
    }

    if (n_high < 1)
        throw no_solution_error("construct_two_mode: n_high must be >= 1 when m > 0");
    const double l0sq = p.c() + 1.0;
    const double lN = mode_frequency(p, n_high);
    const double lNsq = lN * lN;
    if (lNsq * t.y1 / (a2 * m2) < t.y2)
        throw no_solution_error(
            "construct_two_mode: no solution with this n_high (l_N^2 Y1/(a^2 m^2) < Y2); "
            "min valid index is " + std::to_string(min_two_mode_index(t)));
    const double denom = lNsq - l0sq;
    const double a0 = a2 / denom * (lNsq * t.y1 / (a2 * m2) - t.y2);
    const double aN = a2 / denom * (t.y2 - l0sq * t.y1 / (a2 * m2));
    std::map<std::size_t, double> coeffs;
    if (a0 > 0.0) coeffs[0] = a0;
    if (aN > 0.0) coeffs[n_high] = aN;
    return SymmetricState::modes(std::move(coeffs));
}

// Constraint residuals (r1, r2) = (m^2 sum a_n - Y1, sum a_n l_n^2/a^2 - Y2).
inline std::pair<double, double> verify_solution(const SymmetricState& s,
                                                 const SemiclassicalTargets& t) {
    const auto [sa, sal2] = moments(s, t.params);
    return {t.params.m() * t.params.m() * sa - t.y1, sal2 - t.y2};
}

// Targets after a -> lam a with xi, m^2 a^2, Lambda a^2, kappa/a^2 fixed:
//   Y1 -> lam^-4 (Y1 + m^2 a^2 c log(lam) / (8 pi^2 a^4))
//   Y2 -> lam^-4 (Y2 + c^2 log(lam) / (32 pi^2 a^4))
inline std::pair<double, double> scale_transform(const SemiclassicalTargets& t,
                                                 double lam) {
    if (!(lam > 0.0)) throw std::domain_error("scale_transform: lam must be positive");
    const ModelParams& p = t.params;
    const double a2 = p.a() * p.a();
    const double a4 = a2 * a2;
    const double c = p.c();
    const double m2a2 = p.m() * p.m() * a2;
    const double pi2 = M_PI * M_PI;
    const double s = 1.0 / (lam * lam * lam * lam);
    const double lg = std::log(lam);
    return {s * (t.y1 + m2a2 * c * lg / (8.0 * pi2 * a4)),
            s * (t.y2 + c * c * lg / (32.0 * pi2 * a4))};
}

}  // namespace esu
