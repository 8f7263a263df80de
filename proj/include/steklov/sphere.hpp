#pragma once

// Quadrature and real spherical-harmonic analysis on S^{n-1}, n in {2, 3}.
//
// Harmonic numbering (degree k, index m):
//   n = 2:  (0,0) -> 1/sqrt(2 pi);  (k,0) -> cos(k t)/sqrt(pi);  (k,1) -> sin(k t)/sqrt(pi)
//   n = 3:  m in [-k, k]; m > 0 uses cos(m phi), m < 0 uses sin(|m| phi)
// Every basis function has unit L^2 norm and -Lap Y = k(k+n-2) Y.

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace steklov::sphere {

using Point = std::array<double, 3>;

struct HarmonicIndex {
    int degree;
    int index;
    friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// Number of harmonics of degree <= max_degree.
std::size_t harmonic_count(int n, int max_degree);
std::size_t flat_index(int n, HarmonicIndex h);
HarmonicIndex harmonic_at(int n, std::size_t flat);
/// Eigenvalue k(k+n-2) of -Lap on S^{n-1}.
double laplace_eigenvalue(int n, int degree);
/// Surface area of S^{n-1}.
double sphere_area(int n);

class SphereGrid {
public:
    /// n = 2: `resolution` equally spaced angles. n = 3: `resolution`
    /// Gauss-Legendre polar nodes times 2*resolution azimuthal nodes.
    SphereGrid(int n, int resolution);

    int dimension() const { return n_; }
    int resolution() const { return resolution_; }
    /// Highest degree whose products integrate exactly on this grid.
    int max_degree() const { return max_degree_; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t harmonics() const { return harmonic_count(n_, max_degree_); }

    std::span<const Point> nodes() const { return nodes_; }
    std::span<const double> weights() const { return weights_; }
    /// n = 2: the angle of each node. n = 3: the polar angle.
    std::span<const double> angles() const { return angle_; }

    /// Samples of harmonic `flat` at the nodes.
    std::span<const double> basis(std::size_t flat) const;
    /// Tangential gradient of harmonic `flat` in the orthonormal frame
    /// (e_theta) for n = 2 or (e_theta, e_phi) for n = 3; component 1 is
    /// identically zero for n = 2.
    std::span<const double> basis_gradient(std::size_t flat, int component) const;

private:
    int n_;
    int resolution_;
    int max_degree_;
    std::vector<Point> nodes_;
    std::vector<double> weights_;
    std::vector<double> angle_;
    std::vector<double> basis_;
    std::array<std::vector<double>, 2> gradient_;
};

using GridPtr = std::shared_ptr<const SphereGrid>;

GridPtr make_grid(int n, int resolution);

struct HarmonicExpansion {
    HarmonicExpansion() = default;
    HarmonicExpansion(int n, int max_degree);

    int n = 2;
    int max_degree = 0;
    std::vector<double> coefficients;

    double at(HarmonicIndex h) const;
    double& at(HarmonicIndex h);
    /// Sum of squared coefficients.
    double l2_norm_sq() const;
    /// Sum of k(k+n-2) a_k^2.
    double h1_seminorm_sq() const;
};

/// Tangential vector field sampled on the grid (see SphereGrid::basis_gradient).
struct TangentField {
    std::vector<double> a;
    std::vector<double> b;
};

double integrate(const SphereGrid& grid, std::span<const double> samples);

std::vector<double> harmonic_basis(const SphereGrid& grid, int degree, int index);

/// Coefficients up to `max_degree` (defaults to the grid maximum) by quadrature.
HarmonicExpansion expand(const SphereGrid& grid, std::span<const double> samples,
                         int max_degree = -1);
std::vector<double> synthesize(const SphereGrid& grid, const HarmonicExpansion& expansion);

TangentField surface_gradient(const SphereGrid& grid, const HarmonicExpansion& expansion);
std::vector<double> surface_gradient_sq(const SphereGrid& grid,
                                        const HarmonicExpansion& expansion);

struct SobolevNorms {
    double l2_norm_sq;
    double h1_seminorm_sq;
    double sup_norm;
    double grad_sup_norm;
};

/// Norms of band-limited samples; gradients come from the harmonic expansion.
SobolevNorms sobolev_norms(const SphereGrid& grid, std::span<const double> samples);

} // namespace steklov::sphere
