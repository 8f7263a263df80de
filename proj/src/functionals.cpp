#include "steklov/functionals.hpp"

#include "steklov/quadrature.hpp"
#include "steklov/special.hpp"

#include <cmath>
#include <stdexcept>

namespace steklov::functionals {

using shape::StarShape;
using special::BesselOrder;
using special::RadialWeight;

double radial_volume_integral(int n, double a, double b, double tol)
{
    const auto order = BesselOrder::for_dimension(n);
    const auto density = [order](double r) {
        const double i0 = special::bessel_i(order, r);
        const double i1 = special::bessel_i(order.next(), r);
        return r * (i0 * i0 + i1 * i1);
    };
    return quadrature::integrate_adaptive(density, a, b, tol);
}

double weighted_perimeter(const StarShape& shape)
{
    const int n = shape.dimension();
    const RadialWeight w(shape.rho(), n);
    const auto grad_sq = shape.gradient_sq();
    std::vector<double> f(shape.v().size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double t = 1.0 + shape.v()[i];
        f[i] = special::weight_h(w, t) * std::pow(t, n - 1) * std::sqrt(1.0 + grad_sq[i] / (t * t));
    }
    return std::pow(shape.rho(), n - 1) * sphere::integrate(shape.grid(), f);
}

double weighted_volume_boundary(const StarShape& shape)
{
    const int n = shape.dimension();
    const RadialWeight w(shape.rho(), n);
    std::vector<double> f(shape.v().size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double t = 1.0 + shape.v()[i];
        f[i] = special::weight_f(w, t) * std::pow(t, n - 1);
    }
    return std::pow(shape.rho(), n - 1) * sphere::integrate(shape.grid(), f);
}

double weighted_volume_bulk(const StarShape& shape, double tol)
{
    const int n = shape.dimension();
    const auto r = shape.radius();
    std::vector<double> f(r.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = radial_volume_integral(n, 0.0, r[i], tol);
    return sphere::integrate(shape.grid(), f);
}

WeightedMeasures weighted_volume(const StarShape& shape)
{
    WeightedMeasures m{};
    m.v_bulk = weighted_volume_bulk(shape);
    m.v_boundary = weighted_volume_boundary(shape);
    m.p = weighted_perimeter(shape);
    m.ratio = m.v_boundary / m.p;
    return m;
}

double rayleigh_upper_bound(const StarShape& shape)
{
    return weighted_volume_boundary(shape) / weighted_perimeter(shape);
}

double gamma(int n, double omega)
{
    return 1.0 / special::lambda_ball(n, special::ball_radius(n, omega));
}

double stability_gap(const StarShape& shape)
{
    const int n = shape.dimension();
    const RadialWeight w(shape.rho(), n);
    const double f1 = special::weight_f(w, 1.0);
    const double h1 = special::weight_h(w, 1.0);
    const auto grad_sq = shape.gradient_sq();
    std::vector<double> g(shape.v().size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double t = 1.0 + shape.v()[i];
        const double jac = std::pow(t, n - 1);
        g[i] = jac * (f1 * special::weight_h(w, t) * std::sqrt(1.0 + grad_sq[i] / (t * t))
                      - h1 * special::weight_f(w, t));
    }
    return sphere::integrate(shape.grid(), g);
}

PenaltyConfig PenaltyConfig::defaults(int n, double omega)
{
    const double rho = special::ball_radius(n, omega);
    const double lam = 10.0 * std::max(1.0, gamma(n, omega));
    return {0.05 * rho, lam, lam, lam, omega};
}

void PenaltyConfig::validate(int n) const
{
    if (!(delta > 0.0 && lambda1 > 0.0 && lambda2 > 0.0 && lambda3 > 0.0 && omega > 0.0))
        throw std::invalid_argument("penalty config: all parameters must be positive");
    if (!(delta < special::ball_radius(n, omega)))
        throw std::invalid_argument("penalty config: delta must be smaller than rho");
}

double j0(const StarShape& shape)
{
    return weighted_perimeter(shape)
         - gamma(shape.dimension(), shape.omega()) * weighted_volume_boundary(shape);
}

double annulus_excess(const StarShape& shape, double inner, double outer)
{
    const int n = shape.dimension();
    const auto r = shape.radius();
    std::vector<double> f(r.size(), 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (r[i] > outer)
            f[i] = radial_volume_integral(n, outer, r[i]);
        else if (r[i] < inner)
            f[i] = radial_volume_integral(n, r[i], inner);
    }
    return sphere::integrate(shape.grid(), f);
}

PenaltyTerms penalty_terms(const StarShape& shape, const PenaltyConfig& config)
{
    const int n = shape.dimension();
    config.validate(n);
    const double rho = special::ball_radius(n, config.omega);

    PenaltyTerms t{};
    t.j0 = weighted_perimeter(shape) - gamma(n, config.omega) * weighted_volume_boundary(shape);
    double x2 = 0.0;
    for (double c : shape::barycenter(shape))
        x2 += c * c;
    t.barycenter = config.lambda1 * std::sqrt(x2);
    t.measure = config.lambda2 * std::abs(shape::measure(shape) - config.omega);
    t.annulus = config.lambda3 * annulus_excess(shape, rho - config.delta, rho + config.delta);
    t.total = t.j0 + t.barycenter + t.measure + t.annulus;
    return t;
}

double penalized_j(const StarShape& shape, const PenaltyConfig& config)
{
    return penalty_terms(shape, config).total;
}

} // namespace steklov::functionals
