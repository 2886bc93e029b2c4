#ifndef WEYLFORGE_LINALG_HPP
#define WEYLFORGE_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "weylforge/poly.hpp"

namespace weylforge {

using Vector = std::vector<double>;

// Dense row-major rectangular matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    Vector column(std::size_t j) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

//
// Real symmetric matrix of order n. Symmetry is exact: construction from
// arbitrary rows averages the two triangles, and set() writes both entries.
//
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    // Throws ValidationError if rows are not square or contain non-finite values.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix from_dense(const Matrix& m);
    static SymMatrix diagonal(std::span<const double> d);

    std::size_t order() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v);

    std::vector<std::vector<double>> rows() const;
    Matrix dense() const;

    double max_abs() const;
    double frobenius() const;

    // Leading principal k x k block.
    SymMatrix leading_block(std::size_t k) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);

// V * M * V^T, symmetrized.
SymMatrix congruence(const Matrix& v, const SymMatrix& m);

struct EigenDecomp {
    Vector values;    // non-increasing
    Matrix vectors;   // column i pairs with values[i]
};

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;
    double zero_threshold = 0.0;
};

inline constexpr double kJacobiRelTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 50;
inline constexpr double kDefaultZeroTol = 1e-8;
inline constexpr double kDefaultMatchTol = 1e-6;
inline constexpr double kDefaultAlignTol = 1e-8;

// Cyclic Jacobi. Eigenvalues sorted non-increasing; each eigenvector column is
// signed so that its largest-magnitude entry is positive. Throws
// NumericalError if the off-diagonal norm does not fall below
// 1e-12 * max(1, ||M||_F) within 50 sweeps.
EigenDecomp sym_eigen(const SymMatrix& m);

Vector eigenvalues(const SymMatrix& m);

// Eigenvalues above tau count as positive, below -tau as negative, with
// tau = zero_tol * max(1, ||M||_F).
Inertia inertia(const SymMatrix& m, double zero_tol = kDefaultZeroTol);

// Orthogonal V with V * diag(roots of h) * V^T = C (to align_tol). Throws
// DomainError if the spectrum of C differs from the roots of h by more than
// match_tol * max(1, max |root|), NumericalError if the residual check fails.
Matrix align_orthogonal(const RootedPoly& h, const SymMatrix& c,
                        double match_tol = kDefaultMatchTol,
                        double align_tol = kDefaultAlignTol);

// M + sign * v v^T. Throws DomainError on a length mismatch or a sign other
// than +1 / -1.
SymMatrix add_outer(const SymMatrix& m, std::span<const double> v, int sign);

} // namespace weylforge

#endif
