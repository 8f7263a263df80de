#pragma once

// Star-shaped domains r(xi) = rho (1 + v(xi)) around the origin, with
// rho = (omega / omega_n)^{1/n}, and the constraint class used for the
// stability estimates: prescribed measure, barycenter at the origin and a
// W^{1,inf} bound on v.

#include "steklov/sphere.hpp"

#include <stdexcept>
#include <vector>

namespace steklov::shape {

class NotStarShapedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ProjectionError : public std::runtime_error {
public:
    ProjectionError(const std::string& what, int iterations, double measure_residual,
                    double barycenter_residual);
    int iterations() const { return iterations_; }
    double measure_residual() const { return measure_residual_; }
    double barycenter_residual() const { return barycenter_residual_; }

private:
    int iterations_;
    double measure_residual_;
    double barycenter_residual_;
};

/// Immutable polar-form domain. Samples of v and its tangential gradient are
/// authoritative for quadrature; the coefficient mirror is exact only while
/// band_limited() holds.
class StarShape {
public:
    StarShape(sphere::GridPtr grid, double omega, std::vector<double> v,
              sphere::TangentField dv, sphere::HarmonicExpansion coeffs, bool band_limited);

    int dimension() const { return grid_->dimension(); }
    double omega() const { return omega_; }
    double rho() const { return rho_; }
    const sphere::SphereGrid& grid() const { return *grid_; }
    const sphere::GridPtr& grid_ptr() const { return grid_; }

    const std::vector<double>& v() const { return v_; }
    const sphere::TangentField& dv() const { return dv_; }
    const sphere::HarmonicExpansion& coefficients() const { return coeffs_; }
    bool band_limited() const { return band_limited_; }

    /// |Dv|^2 at the nodes.
    std::vector<double> gradient_sq() const;
    /// r(xi) = rho (1 + v(xi)) at the nodes.
    std::vector<double> radius() const;

private:
    sphere::GridPtr grid_;
    double omega_;
    double rho_;
    std::vector<double> v_;
    sphere::TangentField dv_;
    sphere::HarmonicExpansion coeffs_;
    bool band_limited_;
};

/// Highest harmonic degree used for generated test shapes (resolution / 4).
int default_band_limit(const sphere::SphereGrid& grid);

StarShape from_coefficients(sphere::GridPtr grid, double omega, sphere::HarmonicExpansion coeffs);
StarShape ball(sphere::GridPtr grid, double omega);

/// Polar profile of B_rho translated by `shift` (length n, |shift| < rho),
/// truncated to harmonics of degree <= band_limit (-1: default band limit).
StarShape shifted_ball(sphere::GridPtr grid, double omega, const std::vector<double>& shift,
                       int band_limit = -1);

/// Lebesgue measure (rho^n / n) * integral of (1+v)^n.
double measure(const StarShape& shape);

/// Barycenter X = rho^{n+1} / ((n+1) |Omega|) * integral of (1+v)^{n+1} xi.
std::vector<double> barycenter(const StarShape& shape);

struct ProjectionOptions {
    double tol = 1e-12;
    int max_iterations = 50;
    bool volume = true;
    bool barycenter = true;
};

/// Damped Newton on the constant and degree-one coefficients until
/// |measure - omega| <= tol * omega and |X| <= tol * rho. Higher modes are
/// left untouched.
StarShape project_to_constraints(const StarShape& shape, const ProjectionOptions& options);
StarShape project_to_constraints(const StarShape& shape, double tol = 1e-12);

/// Radial profile min(r, r_cut), i.e. the set intersected with B_{r_cut}.
StarShape truncate(const StarShape& shape, double r_cut);
/// Radial profile max(r, r_cut), i.e. the union with B_{r_cut}.
StarShape union_ball(const StarShape& shape, double r_cut);

/// r_cut with measure(truncate(shape, r_cut)) == target, by bisection.
double truncation_radius(const StarShape& shape, double target);

struct ConstraintReport {
    double measure_residual;                  // |Omega| - omega
    std::vector<double> barycenter_residual;  // X(Omega)
    double eps_sup;                           // max|v| + max|Dv| on the grid
};

ConstraintReport constraint_report(const StarShape& shape);

/// max|v| + max|Dv| over the nodes.
double w1inf_norm(const StarShape& shape);

} // namespace steklov::shape
