#include "oracle.hpp"

#include "steklov/eigen.hpp"
#include "steklov/functionals.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace steklov;
using oracle::rel_err;
using std::numbers::pi;

namespace {

shape::StarShape perturbed(const sphere::GridPtr& g)
{
    sphere::HarmonicExpansion e(2, 6);
    e.at({2, 0}) = 0.05;
    e.at({3, 1}) = -0.03;
    e.at({5, 0}) = 0.01;
    return shape::project_to_constraints(shape::from_coefficients(g, pi, e));
}

// Trial function j in the ordering I_0, (I_1 cos, I_1 sin), ...: value, d/dr, (1/r) d/dtheta.
struct Trial {
    double u, ur, ut;
};

Trial trial(int j, double r, double t)
{
    const int m = (j + 1) / 2;
    const bool is_sin = j > 0 && j % 2 == 0;
    const double im = double(oracle::bessel_i_series(m, r));
    const double dim = m == 0 ? double(oracle::bessel_i_series(1, r))
                              : 0.5 * double(oracle::bessel_i_series(m - 1, r) + oracle::bessel_i_series(m + 1, r));
    const double c = is_sin ? std::sin(m * t) : std::cos(m * t);
    const double dc = is_sin ? m * std::cos(m * t) : -m * std::sin(m * t);
    return {im * c, dim * c, r > 0 ? im * dc / r : 0.0};
}

} // namespace

TEST(Trefftz, DiskClosedForms)
{
    const auto g = sphere::make_grid(2, 128);
    for (double omega : {pi, 4 * pi}) {
        const auto disk = shape::ball(g, omega);
        const double rho = disk.rho();
        const auto sys = eigen::assemble_trefftz(disk, 0);
        const double i0 = special::bessel_i(special::BesselOrder::integer(0), rho);
        const double i1 = special::bessel_i(special::BesselOrder::integer(1), rho);
        EXPECT_LT(rel_err(sys.a_matrix(0, 0), 2 * pi * rho * i0 * i1), 1e-13);
        EXPECT_LT(rel_err(sys.b_matrix(0, 0), 2 * pi * rho * i0 * i0), 1e-13);
    }
    const auto sys = eigen::assemble_trefftz(shape::ball(g, pi), 6);
    for (std::size_t i = 0; i < sys.a_matrix.rows(); ++i)
        for (std::size_t j = 0; j < sys.a_matrix.cols(); ++j)
            if (i != j) {
                EXPECT_NEAR(sys.a_matrix(i, j), 0.0, 1e-13);
                EXPECT_NEAR(sys.b_matrix(i, j), 0.0, 1e-13);
            }
    EXPECT_THROW(eigen::assemble_trefftz(shape::ball(g, pi), 40), std::invalid_argument);
}

TEST(Trefftz, DiskExact)
{
    const auto g = sphere::make_grid(2, 256);
    const auto disk = shape::ball(g, pi);
    for (int m = 0; m <= 16; ++m)
        EXPECT_NEAR(eigen::steklov_lambda(disk, m).lambda, oracle::kLambdaBall2_1, 1e-10) << m;
    const auto r = eigen::steklov_lambda(disk, 8);
    EXPECT_TRUE(r.monotone_flag);
    EXPECT_LT(r.residual, 1e-10);
    EXPECT_EQ(r.ritz_by_modes.size(), 9u);
    const auto big = shape::ball(g, 9 * pi);
    EXPECT_NEAR(eigen::steklov_lambda(big, 12).lambda, special::lambda_ball(2, 3.0), 1e-10);
}

TEST(Trefftz, BulkCrossCheck)
{
    const auto g = sphere::make_grid(2, 256);
    const auto s = perturbed(g);
    const int modes = 3;
    const auto sys = eigen::assemble_trefftz(s, modes);
    const std::size_t k = sys.a_matrix.rows();
    const auto radius = s.radius();
    double scale = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        scale = std::max(scale, std::abs(sys.a_matrix(i, i)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            double bulk = 0.0;
            for (std::size_t p = 0; p < radius.size(); ++p) {
                const double t = g->angles()[p];
                const auto f = [&](double r) {
                    const auto a = trial(int(i), r, t), b = trial(int(j), r, t);
                    return r * (a.u * b.u + a.ur * b.ur + a.ut * b.ut);
                };
                bulk += g->weights()[p] * quadrature::integrate_adaptive(f, 0.0, radius[p], 1e-12);
            }
            EXPECT_NEAR(sys.a_matrix(i, j), bulk, 1e-7 * scale) << i << " " << j;
        }
    EXPECT_LT(sys.a_asymmetry, 1e-10 * scale);
}

TEST(Trefftz, ChainAndConvergence)
{
    const auto g = sphere::make_grid(2, 256);
    const auto s = perturbed(g);
    const auto r16 = eigen::steklov_lambda(s, 16);
    const auto r24 = eigen::steklov_lambda(s, 24);
    const double ratio = functionals::rayleigh_upper_bound(s);
    EXPECT_LE(r16.lambda, ratio);
    EXPECT_LE(ratio, special::lambda_ball(2, 1.0));
    EXPECT_LT(r16.lambda, ratio - 1e-6);
    EXPECT_TRUE(r16.monotone_flag);
    EXPECT_NEAR(r16.lambda, r24.lambda, 1e-9);
    EXPECT_LT(r24.residual, 1e-8);
    for (std::size_t m = 1; m < r16.ritz_by_modes.size(); ++m)
        EXPECT_LE(r16.ritz_by_modes[m], r16.ritz_by_modes[m - 1] * (1 + 1e-13));
    EXPECT_NEAR(r16.ritz_by_modes[0], ratio, 1e-12);
}

TEST(Robin, Values)
{
    const auto r = eigen::robin_ball_eigenvalue(2, 1.0, -1.0);
    EXPECT_LT(r.residual, 1e-10);
    EXPECT_NEAR(r.lambda, -r.kappa * r.kappa, 0.0);
    const double k = r.kappa;
    const double i0 = double(oracle::bessel_i_series(0, k)), i1 = double(oracle::bessel_i_series(1, k));
    EXPECT_NEAR(k * i1 / i0, 1.0, 1e-10);
    // Robin relation sqrt(-lambda) I_0'(sqrt(-lambda)) + alpha I_0(sqrt(-lambda)) = 0
    EXPECT_NEAR(std::sqrt(-r.lambda) * i1 - i0, 0.0, 1e-9);

    const auto zero = eigen::robin_ball_eigenvalue(3, 2.0, 0.0);
    EXPECT_EQ(zero.lambda, 0.0);
    EXPECT_EQ(zero.kappa, 0.0);
    EXPECT_LT(std::abs(eigen::robin_ball_eigenvalue(2, 1.0, -1e-8).lambda), 1e-7);
    EXPECT_THROW(eigen::robin_ball_eigenvalue(2, 1.0, 0.5), std::domain_error);
    EXPECT_THROW(eigen::robin_ball_eigenvalue(2, 0.0, -1.0), std::domain_error);
}

TEST(Robin, ScalingAndMonotone)
{
    for (int n : {2, 3, 5})
        for (double c : {0.5, 2.0, 3.0}) {
            const double a = eigen::robin_ball_eigenvalue(n, 1.3, -0.7).lambda;
            const double b = eigen::robin_ball_eigenvalue(n, 1.3 * c, -0.7 / c).lambda;
            EXPECT_NEAR(c * c * b, a, 1e-9 * std::max(1.0, std::abs(a)));
        }
    const auto map = eigen::robin_monotone_map(3, 1.0);
    double prev = map(-4.0);
    for (double alpha = -3.5; alpha <= 0.0; alpha += 0.5) {
        const double l = map(alpha);
        EXPECT_GT(l, prev);
        prev = l;
    }
    EXPECT_GT(std::abs(map(-2.0)), std::abs(map(-1.0)));
    for (double alpha : {-0.3, -1.0, -4.0}) {
        const double l = map(alpha);
        EXPECT_NEAR(eigen::robin_alpha_for_lambda(3, 1.0, l), alpha, 1e-10);
    }
}
