#include "steklov/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace steklov::special {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension(int n)
{
    if (n < 2)
        throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(n));
}

int twice(double nu) { return static_cast<int>(std::lround(2.0 * nu)); }

} // namespace

BesselOrder::BesselOrder(int twice_order) : twice_(twice_order)
{
    if (twice_order < 0)
        throw std::domain_error("negative Bessel order");
}

BesselOrder BesselOrder::for_dimension(int n)
{
    require_dimension(n);
    return BesselOrder(n - 2);
}

RadialWeight::RadialWeight(double rho_, int n_) : rho(rho_), n(n_)
{
    if (!(rho_ > 0.0))
        throw std::domain_error("radial weight needs rho > 0");
    require_dimension(n_);
}

double gamma_half_integer(int twice_x)
{
    if (twice_x <= 0)
        throw std::domain_error("gamma_half_integer: argument must be positive");
    double g;
    int start;
    if (twice_x % 2 == 0) {
        g = 1.0; // Gamma(1)
        start = 2;
    } else {
        g = std::sqrt(kPi); // Gamma(1/2)
        start = 1;
    }
    // Gamma(x+1) = x Gamma(x), stepping x by one (twice_x by two).
    for (int t = start; t < twice_x; t += 2)
        g *= 0.5 * t;
    return g;
}

namespace detail {

double switchover(double nu) { return 25.0 + std::max(2.0 * nu, 0.5 * nu * nu); }

// sum_k (1/2)^{nu+2k} s^{2k} / (k! Gamma(nu+k+1)); all terms positive.
double series_reduced(double nu, double s)
{
    const double q = 0.25 * s * s;
    double term = std::pow(0.5, nu) / gamma_half_integer(twice(nu) + 2);
    double sum = term;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (term <= 1e-17 * sum && k * (nu + k) > q)
            break;
    }
    return sum;
}

// exp(-s) I_nu(s) ~ (2 pi s)^{-1/2} sum_k (-1)^k a_k(nu) s^{-k}
double asymptotic_scaled(double nu, double s)
{
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = -term * (mu - odd * odd) / (8.0 * k * s);
        if (std::abs(next) >= std::abs(term))
            break; // past the smallest term of the asymptotic series
        term = next;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            break;
    }
    return sum / std::sqrt(2.0 * kPi * s);
}

} // namespace detail

double bessel_i(BesselOrder order, double s)
{
    if (s < 0.0 || std::isnan(s))
        throw std::domain_error("bessel_i: argument must be >= 0");
    const double nu = order.value();
    if (s <= detail::switchover(nu))
        return std::pow(s, nu) * detail::series_reduced(nu, s);
    return std::exp(s) * detail::asymptotic_scaled(nu, s);
}

double bessel_i_scaled(BesselOrder order, double s)
{
    if (s < 0.0 || std::isnan(s))
        throw std::domain_error("bessel_i_scaled: argument must be >= 0");
    const double nu = order.value();
    if (s <= detail::switchover(nu))
        return std::exp(-s) * std::pow(s, nu) * detail::series_reduced(nu, s);
    return detail::asymptotic_scaled(nu, s);
}

double bessel_i_reduced(BesselOrder order, double s)
{
    if (s < 0.0 || std::isnan(s))
        throw std::domain_error("bessel_i_reduced: argument must be >= 0");
    const double nu = order.value();
    if (s <= detail::switchover(nu))
        return detail::series_reduced(nu, s);
    return std::exp(s) * std::pow(s, -nu) * detail::asymptotic_scaled(nu, s);
}

double bessel_i_prime(BesselOrder order, double s)
{
    if (!(s > 0.0))
        throw std::domain_error("bessel_i_prime: argument must be > 0");
    const double nu = order.value();
    const double lead = nu == 0.0 ? 0.0 : (nu / s) * bessel_i(order, s);
    return lead + bessel_i(order.next(), s);
}

double z_value(int n, double r)
{
    return bessel_i_reduced(BesselOrder::for_dimension(n), r);
}

double z_deriv(int n, double r)
{
    return r * bessel_i_reduced(BesselOrder::for_dimension(n).next(), r);
}

double weight_h(const RadialWeight& w, double t)
{
    if (!(t > 0.0))
        throw std::domain_error("weight_h: t must be > 0");
    const double z = z_value(w.n, t * w.rho);
    return z * z;
}

double weight_f(const RadialWeight& w, double t)
{
    if (!(t > 0.0))
        throw std::domain_error("weight_f: t must be > 0");
    const double r = t * w.rho;
    return z_value(w.n, r) * z_deriv(w.n, r);
}

WeightJet weight_jet(const RadialWeight& w, double t)
{
    if (!(t > 0.0))
        throw std::domain_error("weight_jet: t must be > 0");
    const auto order = BesselOrder::for_dimension(w.n);
    const double c = 2.0 * order.value() + 1.0;
    const double rho = w.rho;
    const double r = t * rho;

    // z = r^{-nu} I_nu, y = z' = r q, q = r^{-(nu+1)} I_{nu+1}, q' = r p.
    const double z = bessel_i_reduced(order, r);
    const double q = bessel_i_reduced(order.next(), r);
    const double p = bessel_i_reduced(order.next().next(), r);
    const double y = r * q;
    const double dy = z - c * q;
    const double d2y = y - c * r * p;

    WeightJet jet{};
    jet.h = z * z;
    jet.dh = 2.0 * rho * z * y;
    jet.d2h = 2.0 * rho * rho * (y * y + z * dy);
    jet.f = z * y;
    jet.df = rho * (y * y + z * dy);
    jet.d2f = rho * rho * (3.0 * y * dy + z * d2y);
    return jet;
}

double lambda_ball(int n, double rho)
{
    const auto order = BesselOrder::for_dimension(n);
    if (!(rho > 0.0))
        throw std::domain_error("lambda_ball: rho must be > 0");
    const double nu = order.value();
    if (rho <= detail::switchover(nu + 1.0))
        return rho * detail::series_reduced(nu + 1.0, rho) / detail::series_reduced(nu, rho);
    return bessel_i_scaled(order.next(), rho) / bessel_i_scaled(order, rho);
}

double unit_ball_volume(int n)
{
    require_dimension(n);
    return std::pow(kPi, 0.5 * n) / gamma_half_integer(n + 2);
}

double ball_radius(int n, double omega)
{
    if (!(omega > 0.0))
        throw std::domain_error("measure must be > 0");
    return std::pow(omega / unit_ball_volume(n), 1.0 / n);
}

double hn_scaled(int n, double s)
{
    const auto order = BesselOrder::for_dimension(n);
    const double nu = order.value();
    const double a = bessel_i_scaled(order, s);
    const double b = bessel_i_scaled(order.next(), s);
    return 2.0 * s * s * b * b + 2.0 * (2.0 * nu + 1.0) * s * a * b
         + (2.0 * nu + 3.0 - 2.0 * s * s) * a * a;
}

double hn(int n, double s) { return std::exp(2.0 * s) * hn_scaled(n, s); }

double hn_derivative_scaled(int n, double s)
{
    if (!(s > 0.0))
        throw std::domain_error("hn_derivative: s must be > 0");
    const auto order = BesselOrder::for_dimension(n);
    const double nu = order.value();
    const double a = bessel_i_scaled(order, s);
    const double b = bessel_i_scaled(order.next(), s);
    const double tail = nu == 0.0 ? -2.0 * s : -2.0 * s + 2.0 * nu * (2.0 * nu + 3.0) / s;
    return 2.0 * s * b * b + 2.0 * (2.0 * nu + 3.0) * a * b + tail * a * a;
}

double hn_derivative(int n, double s) { return std::exp(2.0 * s) * hn_derivative_scaled(n, s); }

double hn2_g_derivative(double s)
{
    const double i0 = bessel_i(BesselOrder::integer(0), s);
    const double i1 = bessel_i(BesselOrder::integer(1), s);
    return 6.0 * s * i1 * i1 + 2.0 * s * i0 * i0;
}

double stability_coefficient(int n, double rho)
{
    const RadialWeight w(rho, n);
    const WeightJet j = weight_jet(w, 1.0);
    return (n - 1) * (j.f * j.dh - j.df * j.h) + (j.f * j.d2h - j.d2f * j.h)
         + 2.0 * n * j.h * j.f;
}

} // namespace steklov::special
