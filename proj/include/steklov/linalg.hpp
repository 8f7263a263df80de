#pragma once

// Small dense linear algebra: enough for Newton steps and Rayleigh-Ritz
// problems of a few dozen unknowns.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace steklov::linalg {

/// Row-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Leading k x k block.
    Matrix leading(std::size_t k) const;

    /// max |A - A^T|.
    double asymmetry() const;
    void symmetrize();
    double frobenius_norm() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> multiply(const Matrix& a, const std::vector<double>& x);

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gaussian elimination with partial pivoting.
std::vector<double> solve(Matrix a, std::vector<double> b);

/// LU determinant with partial pivoting.
double determinant(Matrix a);

class NotPositiveDefiniteError : public std::runtime_error {
public:
    NotPositiveDefiniteError(std::size_t row, double pivot);
    std::size_t row() const { return row_; }
    double pivot() const { return pivot_; }

private:
    std::size_t row_;
    double pivot_;
};

/// Lower-triangular L with L L^T = A.
Matrix cholesky(const Matrix& a);

struct SymmetricEigen {
    std::vector<double> values; // ascending
    Matrix vectors;             // column j pairs with values[j]
    int sweeps = 0;
    double off_diagonal = 0.0;  // Frobenius norm at termination
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below tol * ||A||_F.
SymmetricEigen jacobi_eigen(Matrix a, double tol = 1e-12, int max_sweeps = 100);

} // namespace steklov::linalg
