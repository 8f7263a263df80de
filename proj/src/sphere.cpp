#include "steklov/sphere.hpp"

#include "steklov/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace steklov::sphere {

namespace {

constexpr double kPi = std::numbers::pi;

void require_supported(int n)
{
    if (n != 2 && n != 3)
        throw std::invalid_argument("sphere: unsupported dimension " + std::to_string(n)
                                    + " (only 2 and 3)");
}

// Neumaier-compensated running sum.
class Accumulator {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Fully normalized associated Legendre functions P[l][m] (no Condon-Shortley
// phase) and their theta-derivatives at x = cos(theta).
void legendre_table(int lmax, double x, std::vector<std::vector<double>>& p,
                    std::vector<std::vector<double>>& dp)
{
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    p.assign(lmax + 1, std::vector<double>(lmax + 1, 0.0));
    dp.assign(lmax + 1, std::vector<double>(lmax + 1, 0.0));
    p[0][0] = 1.0 / std::sqrt(4.0 * kPi);
    for (int m = 1; m <= lmax; ++m)
        p[m][m] = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s * p[m - 1][m - 1];
    for (int m = 0; m < lmax; ++m)
        p[m + 1][m] = std::sqrt(2.0 * m + 3.0) * x * p[m][m];
    for (int m = 0; m <= lmax; ++m) {
        for (int l = m + 2; l <= lmax; ++l) {
            const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
            const double b = std::sqrt(((l - 1.0) * (l - 1.0) - double(m) * m)
                                       / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
            p[l][m] = a * (x * p[l - 1][m] - b * p[l - 2][m]);
        }
    }
    // dP_l^m/dtheta = (l x P_l^m - sqrt((2l+1)(l^2-m^2)/(2l-1)) P_{l-1}^m) / sin(theta)
    for (int l = 0; l <= lmax; ++l) {
        for (int m = 0; m <= l; ++m) {
            const double lower = l > m ? std::sqrt((2.0 * l + 1.0) * (double(l) * l - double(m) * m)
                                                   / (2.0 * l - 1.0))
                                             * p[l - 1][m]
                                       : 0.0;
            dp[l][m] = (l * x * p[l][m] - lower) / s;
        }
    }
}

} // namespace

std::size_t harmonic_count(int n, int max_degree)
{
    require_supported(n);
    if (max_degree < 0)
        return 0;
    return n == 2 ? std::size_t(2 * max_degree + 1)
                  : std::size_t(max_degree + 1) * std::size_t(max_degree + 1);
}

std::size_t flat_index(int n, HarmonicIndex h)
{
    require_supported(n);
    if (h.degree < 0)
        throw std::out_of_range("negative harmonic degree");
    if (n == 2) {
        if (h.degree == 0) {
            if (h.index != 0)
                throw std::out_of_range("degree-0 circle harmonic has index 0 only");
            return 0;
        }
        if (h.index != 0 && h.index != 1)
            throw std::out_of_range("circle harmonic index must be 0 (cos) or 1 (sin)");
        return std::size_t(2 * h.degree - 1 + h.index);
    }
    if (h.index < -h.degree || h.index > h.degree)
        throw std::out_of_range("sphere harmonic index must lie in [-k, k]");
    return std::size_t(h.degree * h.degree + h.degree + h.index);
}

HarmonicIndex harmonic_at(int n, std::size_t flat)
{
    require_supported(n);
    if (n == 2) {
        if (flat == 0)
            return {0, 0};
        const int k = int((flat + 1) / 2);
        return {k, int(flat) - (2 * k - 1)};
    }
    int k = int(std::sqrt(double(flat)));
    while (std::size_t((k + 1) * (k + 1)) <= flat)
        ++k;
    while (std::size_t(k * k) > flat)
        --k;
    return {k, int(flat) - k * k - k};
}

double laplace_eigenvalue(int n, int degree) { return double(degree) * (degree + n - 2); }

double sphere_area(int n)
{
    require_supported(n);
    return n == 2 ? 2.0 * kPi : 4.0 * kPi;
}

SphereGrid::SphereGrid(int n, int resolution) : n_(n), resolution_(resolution)
{
    require_supported(n);
    if (resolution < 8)
        throw std::invalid_argument("sphere grid resolution must be >= 8");

    if (n == 2) {
        const int count = resolution;
        max_degree_ = count / 2 - 1;
        nodes_.resize(count);
        weights_.assign(count, 2.0 * kPi / count);
        angle_.resize(count);
        for (int j = 0; j < count; ++j) {
            const double t = 2.0 * kPi * j / count;
            angle_[j] = t;
            nodes_[j] = {std::cos(t), std::sin(t), 0.0};
        }
        const std::size_t nh = harmonics();
        basis_.assign(nh * count, 0.0);
        gradient_[0].assign(nh * count, 0.0);
        gradient_[1].assign(nh * count, 0.0);
        const double c0 = 1.0 / std::sqrt(2.0 * kPi);
        const double ck = 1.0 / std::sqrt(kPi);
        for (int j = 0; j < count; ++j)
            basis_[j] = c0;
        for (int k = 1; k <= max_degree_; ++k) {
            const std::size_t ic = flat_index(2, {k, 0}) * count;
            const std::size_t is = flat_index(2, {k, 1}) * count;
            for (int j = 0; j < count; ++j) {
                const double c = std::cos(k * angle_[j]);
                const double s = std::sin(k * angle_[j]);
                basis_[ic + j] = ck * c;
                basis_[is + j] = ck * s;
                gradient_[0][ic + j] = -ck * k * s;
                gradient_[0][is + j] = ck * k * c;
            }
        }
        return;
    }

    const int polar = resolution;
    const int azimuth = 2 * resolution;
    max_degree_ = polar - 1;
    const auto rule = quadrature::gauss_legendre(polar);
    const std::size_t count = std::size_t(polar) * azimuth;
    nodes_.resize(count);
    weights_.resize(count);
    angle_.resize(count);
    const std::size_t nh = harmonics();
    basis_.assign(nh * count, 0.0);
    gradient_[0].assign(nh * count, 0.0);
    gradient_[1].assign(nh * count, 0.0);

    std::vector<std::vector<double>> p, dp;
    for (int i = 0; i < polar; ++i) {
        const double x = rule.nodes[i];
        const double theta = std::acos(x);
        const double st = std::sin(theta);
        legendre_table(max_degree_, x, p, dp);
        for (int j = 0; j < azimuth; ++j) {
            const std::size_t node = std::size_t(i) * azimuth + j;
            const double phi = 2.0 * kPi * j / azimuth;
            nodes_[node] = {st * std::cos(phi), st * std::sin(phi), x};
            weights_[node] = rule.weights[i] * 2.0 * kPi / azimuth;
            angle_[node] = theta;
            for (int l = 0; l <= max_degree_; ++l) {
                for (int m = -l; m <= l; ++m) {
                    const int am = std::abs(m);
                    double ang, dang;
                    if (m == 0) {
                        ang = 1.0;
                        dang = 0.0;
                    } else if (m > 0) {
                        ang = std::sqrt(2.0) * std::cos(m * phi);
                        dang = -std::sqrt(2.0) * m * std::sin(m * phi);
                    } else {
                        ang = std::sqrt(2.0) * std::sin(am * phi);
                        dang = std::sqrt(2.0) * am * std::cos(am * phi);
                    }
                    const std::size_t at = flat_index(3, {l, m}) * count + node;
                    basis_[at] = p[l][am] * ang;
                    gradient_[0][at] = dp[l][am] * ang;
                    gradient_[1][at] = p[l][am] * dang / st;
                }
            }
        }
    }
}

std::span<const double> SphereGrid::basis(std::size_t flat) const
{
    if (flat >= harmonics())
        throw std::out_of_range("harmonic degree too high for grid");
    return std::span<const double>(basis_).subspan(flat * size(), size());
}

std::span<const double> SphereGrid::basis_gradient(std::size_t flat, int component) const
{
    if (flat >= harmonics())
        throw std::out_of_range("harmonic degree too high for grid");
    if (component != 0 && component != 1)
        throw std::out_of_range("gradient component must be 0 or 1");
    return std::span<const double>(gradient_[component]).subspan(flat * size(), size());
}

GridPtr make_grid(int n, int resolution) { return std::make_shared<const SphereGrid>(n, resolution); }

HarmonicExpansion::HarmonicExpansion(int n_, int max_degree_)
    : n(n_), max_degree(max_degree_), coefficients(harmonic_count(n_, max_degree_), 0.0)
{
}

double HarmonicExpansion::at(HarmonicIndex h) const
{
    const auto i = flat_index(n, h);
    return i < coefficients.size() ? coefficients[i] : 0.0;
}

double& HarmonicExpansion::at(HarmonicIndex h)
{
    const auto i = flat_index(n, h);
    if (i >= coefficients.size())
        throw std::out_of_range("harmonic beyond expansion degree");
    return coefficients[i];
}

double HarmonicExpansion::l2_norm_sq() const
{
    double s = 0.0;
    for (double a : coefficients)
        s += a * a;
    return s;
}

double HarmonicExpansion::h1_seminorm_sq() const
{
    double s = 0.0;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        s += laplace_eigenvalue(n, harmonic_at(n, i).degree) * coefficients[i] * coefficients[i];
    return s;
}

double integrate(const SphereGrid& grid, std::span<const double> samples)
{
    if (samples.size() != grid.size())
        throw std::invalid_argument("integrate: sample count does not match grid");
    const auto w = grid.weights();
    Accumulator acc;
    for (std::size_t i = 0; i < samples.size(); ++i)
        acc.add(w[i] * samples[i]);
    return acc.value();
}

std::vector<double> harmonic_basis(const SphereGrid& grid, int degree, int index)
{
    if (degree > grid.max_degree())
        throw std::out_of_range("harmonic degree too high for grid");
    const auto b = grid.basis(flat_index(grid.dimension(), {degree, index}));
    return {b.begin(), b.end()};
}

HarmonicExpansion expand(const SphereGrid& grid, std::span<const double> samples, int max_degree)
{
    if (samples.size() != grid.size())
        throw std::invalid_argument("expand: sample count does not match grid");
    if (max_degree < 0 || max_degree > grid.max_degree())
        max_degree = grid.max_degree();
    HarmonicExpansion out(grid.dimension(), max_degree);
    std::vector<double> weighted(samples.size());
    const auto w = grid.weights();
    for (std::size_t i = 0; i < samples.size(); ++i)
        weighted[i] = w[i] * samples[i];
    for (std::size_t j = 0; j < out.coefficients.size(); ++j) {
        const auto y = grid.basis(j);
        Accumulator acc;
        for (std::size_t i = 0; i < samples.size(); ++i)
            acc.add(weighted[i] * y[i]);
        out.coefficients[j] = acc.value();
    }
    return out;
}

std::vector<double> synthesize(const SphereGrid& grid, const HarmonicExpansion& expansion)
{
    if (expansion.n != grid.dimension())
        throw std::invalid_argument("synthesize: expansion dimension does not match grid");
    if (expansion.max_degree > grid.max_degree())
        throw std::out_of_range("synthesize: expansion degree too high for grid");
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t j = 0; j < expansion.coefficients.size(); ++j) {
        const double a = expansion.coefficients[j];
        if (a == 0.0)
            continue;
        const auto y = grid.basis(j);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += a * y[i];
    }
    return out;
}

TangentField surface_gradient(const SphereGrid& grid, const HarmonicExpansion& expansion)
{
    if (expansion.n != grid.dimension())
        throw std::invalid_argument("surface_gradient: expansion dimension does not match grid");
    if (expansion.max_degree > grid.max_degree())
        throw std::out_of_range("surface_gradient: expansion degree too high for grid");
    TangentField out{std::vector<double>(grid.size(), 0.0), std::vector<double>(grid.size(), 0.0)};
    for (std::size_t j = 0; j < expansion.coefficients.size(); ++j) {
        const double a = expansion.coefficients[j];
        if (a == 0.0)
            continue;
        const auto ga = grid.basis_gradient(j, 0);
        const auto gb = grid.basis_gradient(j, 1);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out.a[i] += a * ga[i];
            out.b[i] += a * gb[i];
        }
    }
    return out;
}

std::vector<double> surface_gradient_sq(const SphereGrid& grid, const HarmonicExpansion& expansion)
{
    const auto g = surface_gradient(grid, expansion);
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = g.a[i] * g.a[i] + g.b[i] * g.b[i];
    return out;
}

SobolevNorms sobolev_norms(const SphereGrid& grid, std::span<const double> samples)
{
    const auto grad_sq = surface_gradient_sq(grid, expand(grid, samples));
    std::vector<double> sq(samples.size());
    SobolevNorms out{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        sq[i] = samples[i] * samples[i];
        out.sup_norm = std::max(out.sup_norm, std::abs(samples[i]));
        out.grad_sup_norm = std::max(out.grad_sup_norm, std::sqrt(grad_sq[i]));
    }
    out.l2_norm_sq = integrate(grid, sq);
    out.h1_seminorm_sq = integrate(grid, grad_sq);
    return out;
}

} // namespace steklov::sphere
