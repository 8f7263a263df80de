#pragma once

// Eigenvalue solvers.
//
// * Trefftz / Rayleigh-Ritz for planar star-shaped domains: the trial space
//   span{I_m(r) cos(m t), I_m(r) sin(m t) : m <= M} consists of exact
//   solutions of -Lap u + u = 0, so the energy form reduces to boundary
//   integrals and the smallest Ritz value is an upper bound for lambda(Omega).
// * Robin eigenvalue of a ball with negative boundary parameter, through the
//   rescaling kappa = sqrt(|lambda_R|) that links it to the Steklov-type
//   problem: kappa I_{n/2}(kappa R) / I_{n/2-1}(kappa R) = |alpha|.

#include "steklov/linalg.hpp"
#include "steklov/shape.hpp"

#include <functional>
#include <limits>
#include <vector>

namespace steklov::eigen {

struct TrefftzSystem {
    int modes = 0;
    linalg::Matrix a_matrix; // boundary form of the H^1 inner products, symmetrized
    linalg::Matrix b_matrix; // boundary L^2 inner products
    double a_asymmetry = 0.0; // max |A - A^T| before symmetrization
};

/// Trial function ordering: I_0, then (I_m cos, I_m sin) for m = 1..M, so the
/// leading (2m+1) block is the system for M = m.
TrefftzSystem assemble_trefftz(const shape::StarShape& shape, int modes);

struct GeneralizedEigen {
    std::vector<double> values; // ascending
    linalg::Matrix vectors;     // B-orthonormal columns
};

/// A x = lambda B x for symmetric A and symmetric positive definite B:
/// diagonal equilibration, Cholesky reduction, cyclic Jacobi.
GeneralizedEigen generalized_eigen(const linalg::Matrix& a, const linalg::Matrix& b);
std::vector<double> generalized_symmetric_eigen(const linalg::Matrix& a, const linalg::Matrix& b);

struct EigenResult {
    double lambda = 0.0;
    int modes_used = 0;
    double residual = 0.0;      // |A x - lambda B x| / (|lambda| |B x|)
    bool monotone_flag = true;  // Ritz values non-increasing in M
    std::vector<double> ritz_by_modes; // smallest Ritz value for M = 0..modes
    double kappa = std::numeric_limits<double>::quiet_NaN(); // Robin only
};

EigenResult steklov_lambda(const shape::StarShape& shape, int modes);

/// lambda_{R,alpha}(B_R) = -kappa^2 for alpha <= 0 (alpha = 0 gives 0).
/// `residual` is |kappa I_{n/2}(kappa R)/I_{n/2-1}(kappa R) - |alpha||.
EigenResult robin_ball_eigenvalue(int n, double radius, double alpha);

/// alpha -> lambda_{R,alpha}(B_R) on alpha <= 0.
std::function<double(double)> robin_monotone_map(int n, double radius);

/// The alpha <= 0 with lambda_{R,alpha}(B_R) = lambda (lambda <= 0).
double robin_alpha_for_lambda(int n, double radius, double lambda);

} // namespace steklov::eigen
