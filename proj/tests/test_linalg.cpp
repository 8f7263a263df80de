#include "steklov/eigen.hpp"
#include "steklov/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace steklov;
using linalg::Matrix;

namespace {

Matrix random_spd(std::size_t n, unsigned seed, double shift)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = u(gen);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                a(i, j) += g(i, k) * g(j, k);
            if (i == j)
                a(i, j) += shift;
        }
    return a;
}

// Roots of det(A - x B) located by a sign scan and refined by bisection.
std::vector<double> determinant_roots(const Matrix& a, const Matrix& b, double lo, double hi, int scan)
{
    auto d = [&](double x) {
        Matrix m(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                m(i, j) = a(i, j) - x * b(i, j);
        return linalg::determinant(m);
    };
    std::vector<double> roots;
    double x0 = lo, d0 = d(lo);
    for (int k = 1; k <= scan; ++k) {
        const double x1 = lo + (hi - lo) * k / scan, d1 = d(x1);
        if ((d0 < 0) != (d1 < 0)) {
            double l = x0, r = x1, dl = d0;
            for (int it = 0; it < 200 && r - l > 1e-15 * std::max(1.0, std::abs(r)); ++it) {
                const double m = 0.5 * (l + r), dm = d(m);
                if ((dm < 0) == (dl < 0)) {
                    l = m;
                    dl = dm;
                } else {
                    r = m;
                }
            }
            roots.push_back(0.5 * (l + r));
        }
        x0 = x1;
        d0 = d1;
    }
    return roots;
}

} // namespace

TEST(Matrix, Basics)
{
    Matrix a(2, 2);
    a(0, 1) = 1.0;
    a(1, 0) = 3.0;
    EXPECT_EQ(a.asymmetry(), 2.0);
    a.symmetrize();
    EXPECT_EQ(a(0, 1), 2.0);
    EXPECT_EQ(a.asymmetry(), 0.0);
    EXPECT_NEAR(a.frobenius_norm(), std::sqrt(8.0), 1e-15);
    const auto l = Matrix::identity(3).leading(2);
    EXPECT_EQ(l.rows(), 2u);
    EXPECT_EQ(l(1, 1), 1.0);
    const auto y = linalg::multiply(a, {1.0, 2.0});
    EXPECT_EQ(y[0], 4.0);
    EXPECT_EQ(y[1], 2.0);
}

TEST(Solve, AndDeterminant)
{
    const auto a = random_spd(6, 1, 0.5);
    std::vector<double> x{1, -2, 3, 0.5, -1, 2};
    const auto b = linalg::multiply(a, x);
    const auto got = linalg::solve(a, b);
    for (std::size_t i = 0; i < x.size(); ++i)
        EXPECT_NEAR(got[i], x[i], 1e-11);
    Matrix t(3, 3);
    t(0, 0) = 2; t(0, 1) = 1; t(1, 0) = 4; t(1, 1) = -1; t(2, 2) = 3; t(0, 2) = 5;
    EXPECT_NEAR(linalg::determinant(t), 3 * (2 * -1 - 1 * 4), 1e-14);
    EXPECT_THROW(linalg::solve(Matrix(2, 2), {1.0, 1.0}), linalg::SingularMatrixError);
}

TEST(Cholesky, FactorsAndRejects)
{
    const auto a = random_spd(5, 2, 0.1);
    const auto l = linalg::cholesky(a);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 5; ++k)
                s += l(i, k) * l(j, k);
            EXPECT_NEAR(s, a(i, j), 1e-12);
            if (j > i)
                EXPECT_EQ(l(i, j), 0.0);
        }
    Matrix bad = Matrix::identity(3);
    bad(2, 2) = -1.0;
    try {
        linalg::cholesky(bad);
        FAIL();
    } catch (const linalg::NotPositiveDefiniteError& e) {
        EXPECT_EQ(e.row(), 2u);
        EXPECT_EQ(e.pivot(), -1.0);
    }
}

TEST(Jacobi, SymmetricEigen)
{
    const auto a = random_spd(8, 3, 0.0);
    const auto e = linalg::jacobi_eigen(a);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
    for (std::size_t j = 0; j < 8; ++j) {
        std::vector<double> v(8);
        for (std::size_t i = 0; i < 8; ++i)
            v[i] = e.vectors(i, j);
        const auto av = linalg::multiply(a, v);
        for (std::size_t i = 0; i < 8; ++i)
            EXPECT_NEAR(av[i], e.values[j] * v[i], 1e-11);
    }
    EXPECT_LE(e.off_diagonal, 1e-12 * a.frobenius_norm());
}

TEST(GeneralizedEigen, Trivial)
{
    const auto id = Matrix::identity(4);
    for (double x : eigen::generalized_symmetric_eigen(id, id))
        EXPECT_NEAR(x, 1.0, 1e-15);
    Matrix a(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    const auto v = eigen::generalized_symmetric_eigen(a, Matrix::identity(2));
    EXPECT_NEAR(v[0], 1.0, 1e-15);
    EXPECT_NEAR(v[1], 2.0, 1e-15);
}

TEST(GeneralizedEigen, MatchesDeterminantRoots)
{
    for (unsigned seed : {5u, 6u, 7u}) {
        const auto a = random_spd(5, seed, 0.3);
        const auto b = random_spd(5, seed + 100, 1.0);
        const auto values = eigen::generalized_symmetric_eigen(a, b);
        ASSERT_EQ(values.size(), 5u);
        const auto roots = determinant_roots(a, b, 0.0, values.back() * 1.5 + 1.0, 20000);
        ASSERT_EQ(roots.size(), 5u) << seed;
        for (std::size_t i = 0; i < 5; ++i)
            EXPECT_NEAR(values[i], roots[i], 1e-9 * std::max(1.0, roots[i]));
    }
}

TEST(GeneralizedEigen, BOrthonormalVectorsAndBadScaling)
{
    auto a = random_spd(6, 9, 0.2);
    auto b = random_spd(6, 10, 0.5);
    // Scale rows/columns wildly, as the Trefftz basis does; eigenvalues are invariant.
    const auto ref = eigen::generalized_symmetric_eigen(a, b);
    for (std::size_t i = 0; i < 6; ++i) {
        const double s = std::pow(10.0, double(i) * 2);
        for (std::size_t j = 0; j < 6; ++j) {
            a(i, j) *= s; a(j, i) *= s;
            b(i, j) *= s; b(j, i) *= s;
        }
    }
    const auto ge = eigen::generalized_eigen(a, b);
    for (std::size_t i = 0; i < 6; ++i)
        EXPECT_NEAR(ge.values[i], ref[i], 1e-10 * std::max(1.0, ref[i]));
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = 0; q < 6; ++q) {
            double s = 0.0;
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j)
                    s += ge.vectors(i, p) * b(i, j) * ge.vectors(j, q);
            EXPECT_NEAR(s, p == q ? 1.0 : 0.0, 1e-9);
        }
    EXPECT_THROW(eigen::generalized_eigen(a, Matrix(6, 6)), linalg::NotPositiveDefiniteError);
}
