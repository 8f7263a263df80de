#include "steklov/shape.hpp"

#include "steklov/linalg.hpp"
#include "steklov/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steklov::shape {

using sphere::HarmonicExpansion;
using sphere::TangentField;

ProjectionError::ProjectionError(const std::string& what, int iterations,
                                 double measure_residual, double barycenter_residual)
    : std::runtime_error(what), iterations_(iterations), measure_residual_(measure_residual),
      barycenter_residual_(barycenter_residual)
{
}

StarShape::StarShape(sphere::GridPtr grid, double omega, std::vector<double> v, TangentField dv,
                     HarmonicExpansion coeffs, bool band_limited)
    : grid_(std::move(grid)), omega_(omega), v_(std::move(v)), dv_(std::move(dv)),
      coeffs_(std::move(coeffs)), band_limited_(band_limited)
{
    if (!grid_)
        throw std::invalid_argument("StarShape: null grid");
    rho_ = special::ball_radius(grid_->dimension(), omega);
    if (v_.size() != grid_->size() || dv_.a.size() != grid_->size()
        || dv_.b.size() != grid_->size())
        throw std::invalid_argument("StarShape: sample count does not match grid");
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (!(1.0 + v_[i] > 0.0))
            throw NotStarShapedError("StarShape: 1 + v <= 0 at node " + std::to_string(i));
    }
}

std::vector<double> StarShape::gradient_sq() const
{
    std::vector<double> out(v_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = dv_.a[i] * dv_.a[i] + dv_.b[i] * dv_.b[i];
    return out;
}

std::vector<double> StarShape::radius() const
{
    std::vector<double> out(v_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = rho_ * (1.0 + v_[i]);
    return out;
}

int default_band_limit(const sphere::SphereGrid& grid)
{
    return std::min(grid.max_degree(), grid.resolution() / 4);
}

StarShape from_coefficients(sphere::GridPtr grid, double omega, HarmonicExpansion coeffs)
{
    if (coeffs.n != grid->dimension())
        throw std::invalid_argument("from_coefficients: dimension mismatch");
    auto v = sphere::synthesize(*grid, coeffs);
    auto dv = sphere::surface_gradient(*grid, coeffs);
    return StarShape(std::move(grid), omega, std::move(v), std::move(dv), std::move(coeffs), true);
}

StarShape ball(sphere::GridPtr grid, double omega)
{
    HarmonicExpansion zero(grid->dimension(), 1);
    return from_coefficients(std::move(grid), omega, std::move(zero));
}

StarShape shifted_ball(sphere::GridPtr grid, double omega, const std::vector<double>& shift,
                       int band_limit)
{
    const int n = grid->dimension();
    if (int(shift.size()) != n)
        throw std::invalid_argument("shifted_ball: shift must have n components");
    const double rho = special::ball_radius(n, omega);
    double d2 = 0.0;
    for (double d : shift)
        d2 += d * d;
    if (!(d2 < rho * rho))
        throw std::invalid_argument("shifted_ball: shift must be shorter than the radius");
    if (band_limit < 0)
        band_limit = default_band_limit(*grid);

    const auto nodes = grid->nodes();
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double dx = 0.0;
        for (int c = 0; c < n; ++c)
            dx += shift[c] * nodes[i][c];
        const double r = dx + std::sqrt(rho * rho - d2 + dx * dx);
        v[i] = r / rho - 1.0;
    }
    return from_coefficients(grid, omega, sphere::expand(*grid, v, band_limit));
}

namespace {

// integral of (1+v)^p g over the sphere, g = 1 or a coordinate of xi.
double moment(const StarShape& s, int power, int coordinate)
{
    const auto& grid = s.grid();
    const auto nodes = grid.nodes();
    std::vector<double> f(grid.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = std::pow(1.0 + s.v()[i], power);
        if (coordinate >= 0)
            f[i] *= nodes[i][coordinate];
    }
    return sphere::integrate(grid, f);
}

double barycenter_norm(const std::vector<double>& x)
{
    double s = 0.0;
    for (double c : x)
        s += c * c;
    return std::sqrt(s);
}

bool star_shaped(const std::vector<double>& v)
{
    return std::all_of(v.begin(), v.end(), [](double x) { return 1.0 + x > 0.0; });
}

} // namespace

double measure(const StarShape& shape)
{
    const int n = shape.dimension();
    return std::pow(shape.rho(), n) / n * moment(shape, n, -1);
}

std::vector<double> barycenter(const StarShape& shape)
{
    const int n = shape.dimension();
    const double scale = std::pow(shape.rho(), n + 1) / ((n + 1) * measure(shape));
    std::vector<double> x(n);
    for (int c = 0; c < n; ++c)
        x[c] = scale * moment(shape, n + 1, c);
    return x;
}

StarShape project_to_constraints(const StarShape& shape, const ProjectionOptions& options)
{
    if (!options.volume && !options.barycenter)
        return shape;
    const int n = shape.dimension();
    const auto& grid = shape.grid();
    const auto gp = shape.grid_ptr();
    const auto nodes = grid.nodes();
    const double omega_n = special::unit_ball_volume(n);

    // Controlled harmonics: flat 0 (constant) and 1..n (degree one).
    std::vector<std::size_t> modes;
    if (options.volume)
        modes.push_back(0);
    if (options.barycenter)
        for (int j = 1; j <= n; ++j)
            modes.push_back(std::size_t(j));
    std::vector<int> equations; // -1: volume, c >= 0: barycenter coordinate
    if (options.volume)
        equations.push_back(-1);
    if (options.barycenter)
        for (int c = 0; c < n; ++c)
            equations.push_back(c);
    const std::size_t dim = modes.size();

    std::vector<double> v = shape.v();
    TangentField dv = shape.dv();
    HarmonicExpansion coeffs = shape.coefficients();
    if (coeffs.max_degree < 1) {
        HarmonicExpansion grown(n, 1);
        std::copy(coeffs.coefficients.begin(), coeffs.coefficients.end(),
                  grown.coefficients.begin());
        coeffs = std::move(grown);
    }

    auto residuals = [&](const std::vector<double>& vs, double& meas_res, double& bary_res) {
        StarShape tmp(gp, shape.omega(), vs, dv, coeffs, shape.band_limited());
        meas_res = measure(tmp) - shape.omega();
        bary_res = barycenter_norm(barycenter(tmp));
    };
    auto converged = [&](double meas_res, double bary_res) {
        const bool vol_ok = !options.volume || std::abs(meas_res) <= options.tol * shape.omega();
        const bool bar_ok = !options.barycenter || bary_res <= options.tol * shape.rho();
        return vol_ok && bar_ok;
    };

    double meas_res = 0.0, bary_res = 0.0;
    residuals(v, meas_res, bary_res);
    int iter = 0;
    for (; iter < options.max_iterations && !converged(meas_res, bary_res); ++iter) {
        linalg::Matrix jac(dim, dim);
        std::vector<double> rhs(dim);
        std::vector<double> f(grid.size());
        for (std::size_t e = 0; e < dim; ++e) {
            const int eq = equations[e];
            const int power = eq < 0 ? n - 1 : n;
            // residual
            for (std::size_t i = 0; i < f.size(); ++i) {
                f[i] = eq < 0 ? std::pow(1.0 + v[i], n) / n
                              : std::pow(1.0 + v[i], n + 1) / (n + 1) * nodes[i][eq];
            }
            rhs[e] = -(sphere::integrate(grid, f) - (eq < 0 ? omega_n : 0.0));
            for (std::size_t m = 0; m < dim; ++m) {
                const auto y = grid.basis(modes[m]);
                for (std::size_t i = 0; i < f.size(); ++i) {
                    f[i] = std::pow(1.0 + v[i], power) * y[i];
                    if (eq >= 0)
                        f[i] *= nodes[i][eq];
                }
                jac(e, m) = sphere::integrate(grid, f);
            }
        }
        std::vector<double> step;
        try {
            step = linalg::solve(jac, rhs);
        } catch (const linalg::SingularMatrixError&) {
            throw ProjectionError("projection: singular Newton system", iter, meas_res, bary_res);
        }

        double damping = 1.0;
        std::vector<double> trial;
        for (int halvings = 0;; ++halvings) {
            trial = v;
            for (std::size_t m = 0; m < dim; ++m) {
                const auto y = grid.basis(modes[m]);
                for (std::size_t i = 0; i < trial.size(); ++i)
                    trial[i] += damping * step[m] * y[i];
            }
            if (star_shaped(trial))
                break;
            if (halvings == 30)
                throw NotStarShapedError("projection: no star-shaped Newton step");
            damping *= 0.5;
        }
        v = std::move(trial);
        for (std::size_t m = 0; m < dim; ++m) {
            const double delta = damping * step[m];
            coeffs.coefficients[modes[m]] += delta;
            const auto ga = grid.basis_gradient(modes[m], 0);
            const auto gb = grid.basis_gradient(modes[m], 1);
            for (std::size_t i = 0; i < v.size(); ++i) {
                dv.a[i] += delta * ga[i];
                dv.b[i] += delta * gb[i];
            }
        }
        residuals(v, meas_res, bary_res);
    }
    if (!converged(meas_res, bary_res))
        throw ProjectionError("projection: no convergence after "
                                  + std::to_string(options.max_iterations) + " iterations",
                              iter, meas_res, bary_res);
    return StarShape(gp, shape.omega(), std::move(v), std::move(dv), std::move(coeffs),
                     shape.band_limited());
}

StarShape project_to_constraints(const StarShape& shape, double tol)
{
    ProjectionOptions options;
    options.tol = tol;
    return project_to_constraints(shape, options);
}

namespace {

StarShape clip(const StarShape& shape, double r_cut, bool keep_inside)
{
    if (!(r_cut > 0.0))
        throw std::domain_error("clip radius must be > 0");
    const double rho = shape.rho();
    std::vector<double> v = shape.v();
    TangentField dv = shape.dv();
    bool changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double r = rho * (1.0 + v[i]);
        const bool clipped = keep_inside ? r > r_cut : r < r_cut;
        if (clipped) {
            v[i] = r_cut / rho - 1.0;
            dv.a[i] = 0.0;
            dv.b[i] = 0.0;
            changed = true;
        }
    }
    if (!changed)
        return shape;
    auto coeffs = sphere::expand(shape.grid(), v);
    return StarShape(shape.grid_ptr(), shape.omega(), std::move(v), std::move(dv),
                     std::move(coeffs), false);
}

} // namespace

StarShape truncate(const StarShape& shape, double r_cut) { return clip(shape, r_cut, true); }

StarShape union_ball(const StarShape& shape, double r_cut) { return clip(shape, r_cut, false); }

double truncation_radius(const StarShape& shape, double target)
{
    const int n = shape.dimension();
    const auto r = shape.radius();
    const auto& grid = shape.grid();
    auto clipped_measure = [&](double cut) {
        std::vector<double> f(r.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = std::pow(std::min(r[i], cut), n) / n;
        return sphere::integrate(grid, f);
    };
    double hi = *std::max_element(r.begin(), r.end());
    if (!(target > 0.0) || target > clipped_measure(hi))
        throw std::domain_error("truncation_radius: target measure out of range");
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (clipped_measure(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double w1inf_norm(const StarShape& shape)
{
    double sup = 0.0, grad_sup = 0.0;
    const auto g = shape.gradient_sq();
    for (std::size_t i = 0; i < g.size(); ++i) {
        sup = std::max(sup, std::abs(shape.v()[i]));
        grad_sup = std::max(grad_sup, std::sqrt(g[i]));
    }
    return sup + grad_sup;
}

ConstraintReport constraint_report(const StarShape& shape)
{
    return {measure(shape) - shape.omega(), barycenter(shape), w1inf_norm(shape)};
}

} // namespace steklov::shape
