#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace steklov::quadrature {

struct Rule {
    std::vector<double> nodes;   // ascending, in (-1, 1)
    std::vector<double> weights; // sum to 2
};

/// Gauss-Legendre rule with `count` points on [-1, 1] (Newton on P_count).
Rule gauss_legendre(int count);

/// Cached 16-point rule used by the adaptive integrator.
const Rule& panel_rule();

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive composite Gauss-Legendre on [a, b]. A panel is accepted when its
/// 16-point value agrees with the sum over its two halves to
/// tol * max(|total|, 1e-300); otherwise it is bisected. Throws
/// ConvergenceError once `max_panels` is exceeded.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-11, int max_panels = 4096);

} // namespace steklov::quadrature
