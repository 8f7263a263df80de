#pragma once

// Weighted volume V and weighted perimeter P built from the radial extremal
// z(x) = |x|^{1-n/2} I_{n/2-1}(|x|):
//
//   V(Omega) = int_Omega |Dz|^2 + z^2 dx = int_{dOmega} (dz/dnu) z dH^{n-1}
//   P(Omega) = int_{dOmega} z^2 dH^{n-1}
//
// V/P bounds the eigenvalue from above, with equality on balls centred at
// the origin.

#include "steklov/shape.hpp"

namespace steklov::functionals {

struct WeightedMeasures {
    double v_bulk;     // radial quadrature of |Dz|^2 + z^2 over Omega
    double v_boundary; // boundary flux of z
    double p;
    double ratio;      // v_boundary / p
};

/// Radial V-density integral: int_a^b r (I_nu(r)^2 + I_{nu+1}(r)^2) dr.
double radial_volume_integral(int n, double a, double b, double tol = 1e-11);

double weighted_perimeter(const shape::StarShape& shape);
double weighted_volume_boundary(const shape::StarShape& shape);
double weighted_volume_bulk(const shape::StarShape& shape, double tol = 1e-11);
WeightedMeasures weighted_volume(const shape::StarShape& shape);

/// V/P from the boundary formulas.
double rayleigh_upper_bound(const shape::StarShape& shape);

/// gamma_omega = P(B_rho) / V(B_rho) = 1 / lambda_ball.
double gamma(int n, double omega);

/// f(1) * int h(1+v)(1+v)^{n-1} sqrt(1 + |Dv|^2/(1+v)^2)
///   - h(1) * int f(1+v)(1+v)^{n-1};  zero on the ball.
double stability_gap(const shape::StarShape& shape);

struct PenaltyConfig {
    double delta;
    double lambda1;
    double lambda2;
    double lambda3;
    double omega;

    /// delta = 0.05 rho and Lambda_i = 10 max(1, gamma_omega).
    static PenaltyConfig defaults(int n, double omega);
    /// Throws std::invalid_argument unless all fields are positive and delta < rho.
    void validate(int n) const;
};

struct PenaltyTerms {
    double j0;         // P - gamma V
    double barycenter; // Lambda_1 |X|
    double measure;    // Lambda_2 | |Omega| - omega |
    double annulus;    // Lambda_3 (V(Omega \ B_{rho+delta}) + V(B_{rho-delta} \ Omega))
    double total;
};

double j0(const shape::StarShape& shape);
PenaltyTerms penalty_terms(const shape::StarShape& shape, const PenaltyConfig& config);
double penalized_j(const shape::StarShape& shape, const PenaltyConfig& config);

/// V(Omega \ B_outer) + V(B_inner \ Omega) by radial quadrature.
double annulus_excess(const shape::StarShape& shape, double inner, double outer);

} // namespace steklov::functionals
