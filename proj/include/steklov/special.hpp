#pragma once

// Modified Bessel functions of the first kind I_nu for integer and
// half-integer orders, and the radial weights built from them:
//
//   z(r)   = r^{-nu} I_nu(r),        nu = n/2 - 1
//   h(t)   = z(t rho)^2
//   f(t)   = h'(t) / (2 rho) = (t rho)^{2-n} I_nu(t rho) I_{nu+1}(t rho)
//
// Everything here is a pure function of its arguments.

namespace steklov::special {

/// Bessel order nu stored as 2*nu so half-integers are exact.
class BesselOrder {
public:
    constexpr BesselOrder() = default;
    explicit BesselOrder(int twice_order);

    static BesselOrder integer(int nu) { return BesselOrder(2 * nu); }
    /// nu = n/2 - 1, the order attached to ambient dimension n >= 2.
    static BesselOrder for_dimension(int n);

    int twice_order() const { return twice_; }
    double value() const { return 0.5 * twice_; }
    BesselOrder next() const { return BesselOrder(twice_ + 2); }

    friend bool operator==(BesselOrder, BesselOrder) = default;

private:
    int twice_ = 0;
};

/// Ball radius and ambient dimension for the weights h_rho, f_rho.
struct RadialWeight {
    RadialWeight(double rho, int n);

    double rho;
    int n;
};

/// Gamma(x) for x a positive integer or half-integer, given as 2x.
double gamma_half_integer(int twice_x);

/// I_nu(s), s >= 0.
double bessel_i(BesselOrder order, double s);

/// exp(-s) I_nu(s); finite for every s >= 0.
double bessel_i_scaled(BesselOrder order, double s);

/// s^{-nu} I_nu(s), analytic at s = 0 where it equals 1/(2^nu Gamma(nu+1)).
double bessel_i_reduced(BesselOrder order, double s);

/// I_nu'(s) = (nu/s) I_nu(s) + I_{nu+1}(s), s > 0.
double bessel_i_prime(BesselOrder order, double s);

// The two evaluation branches, exposed so their agreement can be tested.
namespace detail {
double series_reduced(double nu, double s);
double asymptotic_scaled(double nu, double s);
/// Argument above which bessel_i uses the asymptotic expansion.
double switchover(double nu);
} // namespace detail

double z_value(int n, double r);
/// z'(r) = r^{-nu} I_{nu+1}(r).
double z_deriv(int n, double r);

double weight_h(const RadialWeight& w, double t);
double weight_f(const RadialWeight& w, double t);

/// Analytic t-derivatives of h_rho and f_rho, obtained from the recurrences
/// I_nu' = (nu/s) I_nu + I_{nu+1} and I_{nu+1}' = I_nu - ((nu+1)/s) I_{nu+1}.
struct WeightJet {
    double h, dh, d2h;
    double f, df, d2f;
};
WeightJet weight_jet(const RadialWeight& w, double t);

/// Eigenvalue of the ball of radius rho: I_{n/2}(rho) / I_{n/2-1}(rho).
double lambda_ball(int n, double rho);

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);
/// Radius of the ball of measure omega.
double ball_radius(int n, double omega);

/// H_n(s) = 2 s^2 I_{nu+1}^2 + 2(2nu+1) s I_nu I_{nu+1} + (2nu+3 - 2 s^2) I_nu^2.
double hn(int n, double s);
/// exp(-2s) H_n(s).
double hn_scaled(int n, double s);
/// dH_n/ds, scaled by exp(-2s).
double hn_derivative_scaled(int n, double s);
double hn_derivative(int n, double s);
/// For n = 2, d/ds [s H_2'(s)] = 6 s I_1^2 + 2 s I_0^2.
double hn2_g_derivative(double s);

/// Left-hand side of the stability condition
///   (n-1)(f h' - f' h) + (f h'' - f'' h) + 2n h f   at t = 1.
double stability_coefficient(int n, double rho);

} // namespace steklov::special
