#include "weylforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "weylforge/errors.hpp"

namespace weylforge {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DomainError("matrix product: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, std::span<const double> x)
{
    if (a.cols() != x.size())
        throw DomainError("matrix-vector product: dimensions differ");
    Vector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    const std::size_t n = rows.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw ValidationError("matrix rows must form a square array");
        for (double v : rows[i])
            if (!std::isfinite(v))
                throw ValidationError("matrix entry is not finite");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.set(i, j, i == j ? rows[i][i] : 0.5 * (rows[i][j] + rows[j][i]));
    return m;
}

SymMatrix SymMatrix::from_dense(const Matrix& d)
{
    if (d.rows() != d.cols())
        throw DomainError("symmetric matrix must be square");
    SymMatrix m(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = i; j < d.rows(); ++j)
            m.set(i, j, i == j ? d(i, i) : 0.5 * (d(i, j) + d(j, i)));
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d)
{
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.set(i, i, d[i]);
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v)
{
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
}

std::vector<std::vector<double>> SymMatrix::rows() const
{
    std::vector<std::vector<double>> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i].assign(data_.begin() + static_cast<long>(i * n_),
                      data_.begin() + static_cast<long>((i + 1) * n_));
    return out;
}

Matrix SymMatrix::dense() const
{
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m(i, j) = (*this)(i, j);
    return m;
}

double SymMatrix::max_abs() const
{
    double out = 0.0;
    for (double v : data_)
        out = std::max(out, std::abs(v));
    return out;
}

double SymMatrix::frobenius() const
{
    double s = 0.0;
    for (double v : data_)
        s += v * v;
    return std::sqrt(s);
}

SymMatrix SymMatrix::leading_block(std::size_t k) const
{
    if (k > n_)
        throw DomainError("leading_block: block larger than matrix");
    SymMatrix b(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            b.set(i, j, (*this)(i, j));
    return b;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b)
{
    if (a.order() != b.order())
        throw DomainError("matrix sum: orders differ");
    SymMatrix c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = i; j < a.order(); ++j)
            c.set(i, j, a(i, j) + b(i, j));
    return c;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b)
{
    if (a.order() != b.order())
        throw DomainError("matrix difference: orders differ");
    SymMatrix c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = i; j < a.order(); ++j)
            c.set(i, j, a(i, j) - b(i, j));
    return c;
}

SymMatrix congruence(const Matrix& v, const SymMatrix& m)
{
    return SymMatrix::from_dense(v * m.dense() * v.transpose());
}

namespace {

double off_diagonal_norm(const Matrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// A <- J^T A J and V <- V J for the rotation zeroing a(p, q).
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q)
{
    const double apq = a(p, q);
    if (apq == 0.0)
        return;
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
    const double c = 1.0 / std::hypot(1.0, t);
    const double s = t * c;
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

} // namespace

EigenDecomp sym_eigen(const SymMatrix& m)
{
    const std::size_t n = m.order();
    Matrix a = m.dense();
    Matrix v = Matrix::identity(n);
    const double threshold = kJacobiRelTol * std::max(1.0, m.frobenius());

    double off = off_diagonal_norm(a);
    for (int sweep = 0; sweep < kJacobiMaxSweeps && off > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                jacobi_rotate(a, v, p, q);
        off = off_diagonal_norm(a);
    }
    if (off > threshold)
        throw NumericalError("sym_eigen: Jacobi iteration did not converge", off);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomp out{Vector(n), Matrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t src = order[c];
        out.values[c] = a(src, src);
        std::size_t pivot = 0;
        for (std::size_t r = 1; r < n; ++r)
            if (std::abs(v(r, src)) > std::abs(v(pivot, src)))
                pivot = r;
        const double sign = v(pivot, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < n; ++r)
            out.vectors(r, c) = sign * v(r, src);
    }
    return out;
}

Vector eigenvalues(const SymMatrix& m) { return sym_eigen(m).values; }

Inertia inertia(const SymMatrix& m, double zero_tol)
{
    if (!(zero_tol >= 0.0))
        throw ValidationError("inertia: zero_tol must be nonnegative");
    Inertia out;
    out.zero_threshold = zero_tol * std::max(1.0, m.frobenius());
    for (double lambda : eigenvalues(m)) {
        if (lambda > out.zero_threshold)
            ++out.n_plus;
        else if (lambda < -out.zero_threshold)
            ++out.n_minus;
        else
            ++out.n_zero;
    }
    return out;
}

Matrix align_orthogonal(const RootedPoly& h, const SymMatrix& c, double match_tol,
                        double align_tol)
{
    if (h.degree() != c.order())
        throw DomainError("align_orthogonal: degree of h differs from the order of C");
    const auto roots = h.roots();
    EigenDecomp eig = sym_eigen(c);

    double scale = 1.0;
    for (double r : roots)
        scale = std::max(scale, std::abs(r));
    std::size_t worst = 0;
    double worst_gap = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double gap = std::abs(eig.values[i] - roots[i]);
        if (gap > worst_gap) {
            worst_gap = gap;
            worst = i;
        }
    }
    if (worst_gap > match_tol * scale) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "align_orthogonal: spectrum mismatch at index " << worst + 1
            << ": eigenvalue " << eig.values[worst] << " vs root " << roots[worst];
        throw DomainError(msg.str());
    }

    const SymMatrix rebuilt = congruence(eig.vectors, SymMatrix::diagonal(roots));
    const double residual = (rebuilt - c).max_abs();
    if (residual > align_tol * std::max(1.0, c.max_abs()))
        throw NumericalError("align_orthogonal: residual check failed", residual);
    return std::move(eig.vectors);
}

SymMatrix add_outer(const SymMatrix& m, std::span<const double> v, int sign)
{
    if (v.size() != m.order())
        throw DomainError("add_outer: vector length differs from matrix order");
    if (sign != 1 && sign != -1)
        throw DomainError("add_outer: sign must be +1 or -1");
    SymMatrix out = m;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j)
            out.set(i, j, m(i, j) + sign * v[i] * v[j]);
    return out;
}

} // namespace weylforge
