#pragma once

#include <stdexcept>
#include <string>

namespace esu {

// Renormalisation denominator 1 - kappa(alpha2 m^2 + beta2 Lambda) vanished.
class singular_renormalization_error : public std::runtime_error {
public:
    explicit singular_renormalization_error(const std::string& what)
        : std::runtime_error(what) {}
};

// The requested solution set is empty, or no solution exists for the
// requested mode index.
class no_solution_error : public std::runtime_error {
public:
    explicit no_solution_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A bracketing or bisection stage gave up; carries diagnostics.
class solver_failure : public std::runtime_error {
public:
    explicit solver_failure(const std::string& what)
        : std::runtime_error(what) {}
};

// Queried occupation of a mode with a_n = 0: that mode sits in ker(H_1)
// and has no finite occupation eigenvalue.
class mode_in_kernel_error : public std::runtime_error {
public:
    explicit mode_in_kernel_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Evaluation requested on the singular support (coincident or null-separated
// points) of a distributional kernel.
class singular_support_error : public std::runtime_error {
public:
    explicit singular_support_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace esu
