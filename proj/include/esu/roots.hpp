#pragma once

// Bracketing and bisection for strictly decreasing functions on (0, inf).
// The bracket is grown/shrunk geometrically from the starting point; both
// stages are capped and report diagnostics on failure.

#include <cmath>
#include <functional>
#include <string>

#include "esu/errors.hpp"

namespace esu {

struct Bracket {
    double lo = 0.0;  // f(lo) >= target
    double hi = 0.0;  // f(hi) <= target
};

// f strictly decreasing on (0, inf), f -> inf at 0+ and -> below target at
// infinity (or vice versa bounded); doubles/halves from x0 at most
// max_steps times.
inline Bracket bracket_decreasing(const std::function<double(double)>& f,
                                  double target, double x0,
                                  int max_steps = 200,
                                  const char* what = "bracket_decreasing") {
    double x = x0;
    double fx = f(x);
    Bracket b;
    if (fx >= target) {
        b.lo = x;
        for (int i = 0; i < max_steps; ++i) {
            x *= 2.0;
            fx = f(x);
            if (fx <= target) {
                b.hi = x;
                return b;
            }
            b.lo = x;
        }
    } else {
        b.hi = x;
        for (int i = 0; i < max_steps; ++i) {
            x *= 0.5;
            fx = f(x);
            if (fx >= target) {
                b.lo = x;
                return b;
            }
            b.hi = x;
        }
    }
    throw solver_failure(std::string(what) + ": no bracket after " +
                         std::to_string(max_steps) + " doublings from x0=" +
                         std::to_string(x0) + " (target " + std::to_string(target) +
                         ")");
}

// Bisect a strictly decreasing f to the root of f(x) = target inside a
// bracket, until the interval collapses to a few ulps.
inline double bisect_decreasing(const std::function<double(double)>& f,
                                double target, Bracket b, int max_iter = 200) {
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break;  // interval exhausted
        if (f(mid) >= target)
            b.lo = mid;
        else
            b.hi = mid;
    }
    return 0.5 * (b.lo + b.hi);
}

// Convenience: bracket from x0, then bisect.
inline double solve_decreasing(const std::function<double(double)>& f,
                               double target, double x0,
                               const char* what = "solve_decreasing") {
    return bisect_decreasing(f, target, bracket_decreasing(f, target, x0, 200, what));
}

}  // namespace esu
