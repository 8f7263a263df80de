#include "steklov/eigen.hpp"

#include "steklov/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace steklov {

// ---------------------------------------------------------------- linalg

namespace linalg {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::leading(std::size_t k) const
{
    if (k > rows_ || k > cols_)
        throw std::out_of_range("leading block larger than matrix");
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out(i, j) = (*this)(i, j);
    return out;
}

double Matrix::asymmetry() const
{
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
}

void Matrix::symmetrize()
{
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j) {
            const double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
            (*this)(i, j) = m;
            (*this)(j, i) = m;
        }
}

double Matrix::frobenius_norm() const
{
    double s = 0.0;
    for (double x : data_)
        s += x * x;
    return std::sqrt(s);
}

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x)
{
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

std::vector<double> solve(Matrix a, std::vector<double> b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k)))
                piv = i;
        if (a(piv, k) == 0.0)
            throw SingularMatrixError("solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= m * a(k, j);
            b[i] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j)
            s -= a(ii, j) * x[j];
        x[ii] = s / a(ii, ii);
    }
    return x;
}

double determinant(Matrix a)
{
    const std::size_t n = a.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k)))
                piv = i;
        if (a(piv, k) == 0.0)
            return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= m * a(k, j);
        }
    }
    return det;
}

NotPositiveDefiniteError::NotPositiveDefiniteError(std::size_t row, double pivot)
    : std::runtime_error("matrix not positive definite: pivot " + std::to_string(pivot)
                         + " at row " + std::to_string(row)),
      row_(row), pivot_(pivot)
{
}

Matrix cholesky(const Matrix& a)
{
    const std::size_t n = a.rows();
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k)
            d -= l(j, k) * l(j, k);
        if (!(d > 0.0))
            throw NotPositiveDefiniteError(j, d);
        l(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return l;
}

SymmetricEigen jacobi_eigen(Matrix a, double tol, int max_sweeps)
{
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw std::invalid_argument("jacobi_eigen: matrix must be square");
    SymmetricEigen out;
    out.vectors = Matrix::identity(n);
    const double norm = a.frobenius_norm();
    auto off = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    out.off_diagonal = off();
    while (out.off_diagonal > tol * norm && out.sweeps < max_sweeps) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0)
                               / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = out.vectors(k, p), vkq = out.vectors(k, q);
                    out.vectors(k, p) = c * vkp - s * vkq;
                    out.vectors(k, q) = s * vkp + c * vkq;
                }
            }
        }
        ++out.sweeps;
        out.off_diagonal = off();
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
    out.values.resize(n);
    Matrix sorted(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r)
            sorted(r, c) = out.vectors(r, order[c]);
    }
    out.vectors = std::move(sorted);
    return out;
}

} // namespace linalg

// ---------------------------------------------------------------- eigen

namespace eigen {

using linalg::Matrix;

TrefftzSystem assemble_trefftz(const shape::StarShape& shape, int modes)
{
    if (shape.dimension() != 2)
        throw std::invalid_argument("assemble_trefftz: only planar domains are supported");
    if (modes < 0)
        throw std::invalid_argument("assemble_trefftz: modes must be >= 0");
    const auto& grid = shape.grid();
    if (2 * modes > grid.max_degree())
        throw std::invalid_argument("assemble_trefftz: grid too coarse for "
                                    + std::to_string(modes) + " modes");

    const std::size_t count = grid.size();
    const std::size_t dim = 2 * std::size_t(modes) + 1;
    const auto theta = grid.angles();
    const auto weights = grid.weights();
    const double rho = shape.rho();

    // Values, normal-flux weights and arc-length at each node.
    Matrix value(dim, count), flux(dim, count);
    std::vector<double> arc(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double r = rho * (1.0 + shape.v()[i]);
        const double dr = rho * shape.dv().a[i]; // dR/dtheta
        arc[i] = std::sqrt(r * r + dr * dr);
        for (int m = 0; m <= modes; ++m) {
            const auto order = special::BesselOrder::integer(m);
            const double im = special::bessel_i(order, r);
            const double dim_ = m == 0 ? special::bessel_i(order.next(), r)
                                       : special::bessel_i_prime(order, r);
            const double c = std::cos(m * theta[i]);
            const double s = std::sin(m * theta[i]);
            // dnu u dH = (R u_r - (R'/R) u_theta) dtheta
            if (m == 0) {
                value(0, i) = im;
                flux(0, i) = r * dim_;
            } else {
                const std::size_t jc = 2 * m - 1, js = 2 * m;
                value(jc, i) = im * c;
                value(js, i) = im * s;
                flux(jc, i) = r * dim_ * c - (dr / r) * (-m * im * s);
                flux(js, i) = r * dim_ * s - (dr / r) * (m * im * c);
            }
        }
    }

    TrefftzSystem sys;
    sys.modes = modes;
    sys.a_matrix = Matrix(dim, dim);
    sys.b_matrix = Matrix(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            double a = 0.0, b = 0.0;
            for (std::size_t i = 0; i < count; ++i) {
                a += weights[i] * flux(j, i) * value(k, i);
                if (k >= j)
                    b += weights[i] * value(j, i) * value(k, i) * arc[i];
            }
            sys.a_matrix(j, k) = a;
            if (k >= j) {
                sys.b_matrix(j, k) = b;
                sys.b_matrix(k, j) = b;
            }
        }
    }
    sys.a_asymmetry = sys.a_matrix.asymmetry();
    sys.a_matrix.symmetrize();
    return sys;
}

GeneralizedEigen generalized_eigen(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n)
        throw std::invalid_argument("generalized_eigen: dimension mismatch");
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(b(i, i) > 0.0))
            throw linalg::NotPositiveDefiniteError(i, b(i, i));
        scale[i] = 1.0 / std::sqrt(b(i, i));
    }
    Matrix as(n, n), bs(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            as(i, j) = scale[i] * a(i, j) * scale[j];
            bs(i, j) = scale[i] * b(i, j) * scale[j];
        }
    const Matrix l = linalg::cholesky(bs);

    // C = L^{-1} As L^{-T}: forward-substitute columns, then rows.
    Matrix y(n, n); // L^{-1} As
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            double s = as(i, c);
            for (std::size_t k = 0; k < i; ++k)
                s -= l(i, k) * y(k, c);
            y(i, c) = s / l(i, i);
        }
    Matrix cmat(n, n); // (L^{-1} Y^T)^T = Y L^{-T}
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            double s = y(r, i);
            for (std::size_t k = 0; k < i; ++k)
                s -= l(i, k) * cmat(r, k);
            cmat(r, i) = s / l(i, i);
        }
    cmat.symmetrize();

    auto eig = linalg::jacobi_eigen(cmat);
    GeneralizedEigen out;
    out.values = eig.values;
    out.vectors = Matrix(n, n);
    // x = S L^{-T} y
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> x(n);
        for (std::size_t ii = n; ii-- > 0;) {
            double s = eig.vectors(ii, c);
            for (std::size_t k = ii + 1; k < n; ++k)
                s -= l(k, ii) * x[k];
            x[ii] = s / l(ii, ii);
        }
        for (std::size_t r = 0; r < n; ++r)
            out.vectors(r, c) = scale[r] * x[r];
    }
    return out;
}

std::vector<double> generalized_symmetric_eigen(const Matrix& a, const Matrix& b)
{
    return generalized_eigen(a, b).values;
}

EigenResult steklov_lambda(const shape::StarShape& shape, int modes)
{
    const auto sys = assemble_trefftz(shape, modes);
    EigenResult out;
    out.modes_used = modes;
    for (int m = 0; m <= modes; ++m) {
        const std::size_t k = 2 * std::size_t(m) + 1;
        const auto values = generalized_symmetric_eigen(sys.a_matrix.leading(k),
                                                        sys.b_matrix.leading(k));
        out.ritz_by_modes.push_back(values.front());
    }
    for (std::size_t i = 1; i < out.ritz_by_modes.size(); ++i) {
        const double prev = out.ritz_by_modes[i - 1];
        if (out.ritz_by_modes[i] > prev + 1e-12 * std::abs(prev))
            out.monotone_flag = false;
    }

    const auto full = generalized_eigen(sys.a_matrix, sys.b_matrix);
    out.lambda = full.values.front();
    const std::size_t n = full.values.size();
    std::vector<double> x(n);
    for (std::size_t r = 0; r < n; ++r)
        x[r] = full.vectors(r, 0);
    const auto ax = linalg::multiply(sys.a_matrix, x);
    const auto bx = linalg::multiply(sys.b_matrix, x);
    double num = 0.0, den = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        num += (ax[r] - out.lambda * bx[r]) * (ax[r] - out.lambda * bx[r]);
        den += bx[r] * bx[r];
    }
    out.residual = std::sqrt(num) / (std::abs(out.lambda) * std::sqrt(den));
    return out;
}

EigenResult robin_ball_eigenvalue(int n, double radius, double alpha)
{
    if (!(radius > 0.0))
        throw std::domain_error("robin_ball_eigenvalue: radius must be > 0");
    if (alpha > 0.0 || std::isnan(alpha))
        throw std::domain_error("robin_ball_eigenvalue: alpha must be <= 0");
    special::BesselOrder::for_dimension(n);
    EigenResult out;
    out.modes_used = 0;
    if (alpha == 0.0) {
        out.kappa = 0.0;
        out.lambda = 0.0;
        return out;
    }
    const double target = -alpha;
    // kappa * lambda_ball(n, kappa R) rises from 0 to infinity.
    const auto g = [&](double kappa) { return kappa * special::lambda_ball(n, kappa * radius); };
    double lo = 0.0, hi = 1.0;
    while (g(hi) <= target)
        hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (g(mid) < target ? lo : hi) = mid;
    }
    const double glo = lo > 0.0 ? g(lo) : 0.0;
    const double ghi = g(hi);
    const double kappa = std::abs(glo - target) < std::abs(ghi - target) ? lo : hi;
    out.kappa = kappa;
    out.lambda = -kappa * kappa;
    out.residual = std::abs(g(kappa) - target);
    return out;
}

std::function<double(double)> robin_monotone_map(int n, double radius)
{
    special::BesselOrder::for_dimension(n);
    return [n, radius](double alpha) { return robin_ball_eigenvalue(n, radius, alpha).lambda; };
}

double robin_alpha_for_lambda(int n, double radius, double lambda)
{
    if (lambda > 0.0)
        throw std::domain_error("robin_alpha_for_lambda: lambda must be <= 0");
    if (lambda == 0.0)
        return 0.0;
    const double kappa = std::sqrt(-lambda);
    return -kappa * special::lambda_ball(n, kappa * radius);
}

} // namespace eigen
} // namespace steklov
