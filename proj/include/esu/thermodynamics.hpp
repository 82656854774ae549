#pragma once

// Density-matrix spectrum, von Neumann entropy, and the entropy-minimising
// solution of the two constraint equations.
//
// A symmetric quasi-free state with coefficients {a_n} is the density matrix
// with one-particle occupation eigenvalues (multiplicity (n+1)^2)
//
//   eps_n = log( ((n+1)^2 + b_n) / b_n ),     b_n := 2 pi^2 a^2 l_n a_n ,
//
// and entropy functional (the non-positive convention Tr(rho log rho))
//
//   S = sum_n [ b_n log(b_n/(n+1)^2) - ((n+1)^2 + b_n) log(1 + b_n/(n+1)^2) ] .
//
// Minimising S subject to m^2 sum a_n = Y1, sum a_n l_n^2/a^2 = Y2 forces the
// Bose form
//
//   a_n = (n+1)^2/(2 pi^2 a^2 l_n) / ( exp(lam m^2/(2 pi^2 a^2 l_n) + beta l_n/a) - 1 )
//
// whose constraint sums G1, G2 are strictly decreasing in each of lam and
// beta, so the two multipliers are found by nested monotone bisection
// (the outer map beta -> G2(lam*(beta), beta) is again strictly decreasing:
// moving along G1 = Y1 reshuffles weight toward higher l_n as beta drops).
// For m = 0 the first constraint is void and the minimiser is the beta-KMS
// state with G2~(beta) = Y2.

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>

#include "esu/errors.hpp"
#include "esu/model.hpp"
#include "esu/roots.hpp"
#include "esu/semiclassical.hpp"
#include "esu/states.hpp"

namespace esu {

// Occupation eigenvalue eps_n of the one-particle operator; requires a_n > 0.
inline double occupation_spectrum(const SymmetricState& s, const ModelParams& p,
                                  std::size_t n) {
    const double an = s.coefficient(p, n);
    if (!(an > 0.0))
        throw mode_in_kernel_error(
            "occupation_spectrum: a_n = 0, mode lies in ker(H_1)");
    const double k = static_cast<double>(n) + 1.0;
    const double b = 2.0 * M_PI * M_PI * p.a() * p.a() * mode_frequency(p, n) * an;
    return std::log1p(k * k / b);
}

namespace detail {

// Entropy contribution of a single mode.
inline double entropy_term(double k, double b) {
    if (b <= 0.0) return 0.0;
    return b * std::log(b / (k * k)) - (k * k + b) * std::log1p(b / (k * k));
}

}  // namespace detail

// Tr(rho log rho) <= 0; modes with a_n = 0 contribute nothing.
inline double von_neumann_entropy(const SymmetricState& s, const ModelParams& p) {
    const double a2 = p.a() * p.a();
    const double pref = 2.0 * M_PI * M_PI * a2;
    switch (s.kind()) {
        case SymmetricState::Kind::ground:
            return 0.0;
        case SymmetricState::Kind::modes: {
            double S = 0.0;
            for (const auto& [n, an] : s.coeffs()) {
                const double k = static_cast<double>(n) + 1.0;
                S += detail::entropy_term(k, pref * mode_frequency(p, n) * an);
            }
            return S;
        }
        case SymmetricState::Kind::kms: {
            double S = 0.0;
            for (std::size_t n = 0;; ++n) {
                const double k = static_cast<double>(n) + 1.0;
                const double t =
                    detail::entropy_term(k, pref * mode_frequency(p, n) *
                                                kms_coefficient(p, s.beta(), n));
                S += t;
                if (n > 8 && std::abs(t) < 1e-18 * std::abs(S)) break;
            }
            return S;
        }
    }
    return 0.0;
}

// Lower admissibility edge of the lam multiplier at given beta (m > 0 only).
inline double lambda_floor(const ModelParams& p, double beta) {
    const double l0sq = p.c() + 1.0;
    return -2.0 * M_PI * M_PI * p.a() * l0sq * beta / (p.m() * p.m());
}

// Bose-form coefficient of the constrained minimiser.
inline double bose_coefficient(const ModelParams& p, double lambda, double beta,
                               std::size_t n) {
    const double a = p.a();
    const double a2 = a * a;
    const double k = static_cast<double>(n) + 1.0;
    const double l = mode_frequency(p, n);
    const double u = lambda * p.m() * p.m() / (2.0 * M_PI * M_PI * a2 * l) +
                     beta * l / a;
    return k * k / (2.0 * M_PI * M_PI * a2 * l) / std::expm1(u);
}

// (G1, G2) of the Bose family; terms truncated below 1e-18 of the running
// sums (exponential decay certifies the remainder).
inline std::pair<double, double> constraint_sums(const ModelParams& p, double lambda,
                                                 double beta) {
    if (!(beta > 0.0)) throw std::domain_error("constraint_sums: beta must be positive");
    const double m2 = p.m() * p.m();
    if (m2 > 0.0 && !(lambda > lambda_floor(p, beta)))
        throw std::domain_error("constraint_sums: lambda must exceed lambda_0(beta)");
    if (m2 == 0.0) lambda = 0.0;
    const double a2 = p.a() * p.a();
    double g1 = 0.0, g2 = 0.0;
    constexpr std::size_t max_terms = 100000000;
    for (std::size_t n = 0;; ++n) {
        const double an = bose_coefficient(p, lambda, beta, n);
        const double l = mode_frequency(p, n);
        const double t2 = an * l * l / a2;
        g1 += m2 * an;
        g2 += t2;
        if (n > 8 && t2 < 1e-18 * g2) break;
        if (n > max_terms)
            throw solver_failure("constraint_sums: series did not converge within " +
                                 std::to_string(max_terms) + " terms");
    }
    return {g1, g2};
}

struct MinimizerResult {
    enum class Form { ground, single_mode, kms, bose };
    Form form = Form::ground;
    // Multipliers of the Bose form; NaN where not applicable (ground and
    // single-mode outcomes; lambda is arbitrary for the m = 0 KMS outcome).
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    SymmetricState state = SymmetricState::ground();
    std::pair<double, double> residuals{0.0, 0.0};
    double entropy = 0.0;
};

namespace detail {

// Materialise the Bose-form state as explicit mode coefficients, truncated
// at the same relative threshold as the constraint sums.
inline SymmetricState materialize_bose(const ModelParams& p, double lambda,
                                       double beta) {
    std::map<std::size_t, double> coeffs;
    const double a2 = p.a() * p.a();
    double g2 = 0.0;
    for (std::size_t n = 0;; ++n) {
        const double an = bose_coefficient(p, lambda, beta, n);
        const double l = mode_frequency(p, n);
        const double t2 = an * l * l / a2;
        g2 += t2;
        if (an > 0.0) coeffs[n] = an;
        if (n > 8 && t2 < 1e-18 * g2) break;
    }
    return SymmetricState::modes(std::move(coeffs));
}

}  // namespace detail

// The unique entropy-minimising solution.
inline MinimizerResult solve_entropy_minimizer(const SemiclassicalTargets& t) {
    const Classification cls = classify(t);
    if (cls.qf == SolutionSet::empty)
        throw no_solution_error("solve_entropy_minimizer: solution set is empty");

    const ModelParams& p = t.params;
    MinimizerResult r;

    if (cls.qf == SolutionSet::unique_ground) {
        r.form = MinimizerResult::Form::ground;
        r.state = SymmetricState::ground();
        r.residuals = verify_solution(r.state, t);
        r.entropy = 0.0;
        return r;
    }

    const double m2 = p.m() * p.m();

    if (cls.qf == SolutionSet::unique_non_ground) {
        // Boundary m^2 Y2 = (m^2 + xi R) Y1 > 0: only mode 0 is occupied.
        r.form = MinimizerResult::Form::single_mode;
        r.state = SymmetricState::modes({{0, t.y1 / m2}});
        r.residuals = verify_solution(r.state, t);
        r.entropy = von_neumann_entropy(r.state, p);
        return r;
    }

    if (m2 == 0.0) {
        // Single constraint: the minimiser is the beta-KMS state.
        auto g2_of_beta = [&](double beta) {
            return constraint_sums(p, 0.0, beta).second;
        };
        const double beta = solve_decreasing(g2_of_beta, t.y2, 1.0,
                                             "solve_entropy_minimizer[m=0]");
        r.form = MinimizerResult::Form::kms;
        r.beta = beta;
        r.state = SymmetricState::kms(beta);
        r.residuals = verify_solution(r.state, t);
        r.entropy = von_neumann_entropy(r.state, p);
        return r;
    }

    // Strict interior m^2 Y2 > (m^2 + xi R) Y1 > 0: nested bisection.
    // Inner stage: lam*(beta) solving G1 = Y1, parametrised by the offset
    // u = lam - lambda_0(beta) > 0 on which G1 is strictly decreasing.
    auto lambda_star = [&](double beta) {
        const double floor = lambda_floor(p, beta);
        auto g1_of_u = [&](double u) {
            return constraint_sums(p, floor + u, beta).first;
        };
        const double u0 = std::max(1.0, std::abs(floor));
        return floor + solve_decreasing(g1_of_u, t.y1, u0,
                                        "solve_entropy_minimizer[inner]");
    };
    auto g2_on_curve = [&](double beta) {
        return constraint_sums(p, lambda_star(beta), beta).second;
    };
    const double beta = solve_decreasing(g2_on_curve, t.y2, 1.0,
                                         "solve_entropy_minimizer[outer]");
    const double lambda = lambda_star(beta);

    r.form = MinimizerResult::Form::bose;
    r.lambda = lambda;
    r.beta = beta;
    r.state = detail::materialize_bose(p, lambda, beta);
    const auto [g1, g2] = constraint_sums(p, lambda, beta);
    r.residuals = {g1 - t.y1, g2 - t.y2};
    r.entropy = von_neumann_entropy(r.state, p);

    const double tolscale = std::max({1.0, std::abs(t.y1), std::abs(t.y2)});
    if (std::abs(r.residuals.first) > 1e-10 * tolscale ||
        std::abs(r.residuals.second) > 1e-10 * tolscale)
        throw solver_failure(
            "solve_entropy_minimizer: residuals above tolerance (r1=" +
            std::to_string(r.residuals.first) +
            ", r2=" + std::to_string(r.residuals.second) + ")");
    return r;
}

// The unique beta with  sum a_n^{(beta)} l_n^2/a^2 = Y2  and
// m^2 sum a_n^{(beta)} = Y1, if the KMS curve passes through (Y1, Y2).
inline std::optional<double> kms_temperature_solve(const SemiclassicalTargets& t) {
    const ModelParams& p = t.params;
    if (!(t.y2 > 0.0)) return std::nullopt;  // thermal sums are strictly positive
    auto g2_of_beta = [&](double beta) { return constraint_sums(p, 0.0, beta).second; };
    double beta;
    try {
        beta = solve_decreasing(g2_of_beta, t.y2, 1.0, "kms_temperature_solve");
    } catch (const solver_failure&) {
        return std::nullopt;
    }
    // Check the remaining constraint.
    const double g1 = constraint_sums(p, 0.0, beta).first;
    const double scale = std::max({1.0, std::abs(t.y1), std::abs(t.y2)});
    if (std::abs(g1 - t.y1) > 1e-8 * scale) return std::nullopt;
    return beta;
}

}  // namespace esu
