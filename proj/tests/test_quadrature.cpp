#include "steklov/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace steklov::quadrature;

TEST(GaussLegendre, IntegratesPolynomialsExactly)
{
    for (int count : {1, 2, 3, 7, 16, 33}) {
        const auto rule = gauss_legendre(count);
        ASSERT_EQ(rule.nodes.size(), std::size_t(count));
        EXPECT_NEAR(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0), 2.0, 1e-14);
        for (int p = 0; p < 2 * count; ++p) {
            double sum = 0.0;
            for (int i = 0; i < count; ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], p);
            const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
            EXPECT_NEAR(sum, exact, 1e-14) << count << " " << p;
        }
        for (int i = 1; i < count; ++i)
            EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
    }
    EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}

TEST(Adaptive, SmoothAndPeaked)
{
    EXPECT_NEAR(integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 3.0),
                std::exp(3.0) - 1.0, 1e-11 * std::exp(3.0));
    EXPECT_NEAR(integrate_adaptive([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0),
                2.0 / 1e-2 * std::atan(1.0 / 1e-2), 1e-8);
    EXPECT_NEAR(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0), 2.0 / 3.0,
                1e-10);
    EXPECT_EQ(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0), 0.0);
    EXPECT_NEAR(integrate_adaptive([](double x) { return x; }, 1.0, 0.0), -0.5, 1e-15);
}

TEST(Adaptive, GivesUp)
{
    EXPECT_THROW(integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-12, 1.0, 1e-14, 8),
                 ConvergenceError);
}
