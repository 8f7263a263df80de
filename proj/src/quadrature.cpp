#include "steklov/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace steklov::quadrature {

Rule gauss_legendre(int count)
{
    if (count < 1)
        throw std::invalid_argument("gauss_legendre: count must be >= 1");
    Rule rule;
    if (count == 1) {
        rule.nodes = {0.0};
        rule.weights = {2.0};
        return rule;
    }
    rule.nodes.resize(count);
    rule.weights.resize(count);
    const int half = (count + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= count; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = count * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= count; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = count * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[count - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[count - 1 - i] = w;
    }
    if (count % 2 == 1)
        rule.nodes[count / 2] = 0.0;
    return rule;
}

const Rule& panel_rule()
{
    static const Rule rule = gauss_legendre(16);
    return rule;
}

namespace {

double apply(const Rule& rule, const std::function<double(double)>& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_panels)
{
    if (a == b)
        return 0.0;
    const Rule& rule = panel_rule();

    struct Panel {
        double a, b, value;
    };
    // Depth-first over a stack; accepted panels are summed in a fixed order.
    std::vector<Panel> stack{{a, b, apply(rule, f, a, b)}};
    const double scale = std::max(std::abs(stack.front().value), 1e-300);
    double total = 0.0;
    int panels = 1;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        const double left = apply(rule, f, p.a, mid);
        const double right = apply(rule, f, mid, p.b);
        if (std::abs(left + right - p.value) <= tol * scale) {
            total += left + right;
            continue;
        }
        panels += 2;
        if (panels > max_panels)
            throw ConvergenceError("integrate_adaptive: panel limit exceeded");
        stack.push_back({mid, p.b, right});
        stack.push_back({p.a, mid, left});
    }
    return total;
}

} // namespace steklov::quadrature
