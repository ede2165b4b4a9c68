#include "fracollo/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracollo {

DenseMatrix::DenseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("DenseMatrix: dimensions must be positive");
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("DenseMatrix: entry count does not match dimensions");
}

std::vector<double> least_squares(const DenseMatrix& A, const std::vector<double>& b)
{
    const int m = A.rows();
    const int n = A.cols();
    if (m < n)
        throw std::invalid_argument("least_squares: need rows >= cols");
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("least_squares: rhs length does not match row count");

    DenseMatrix R = A;
    std::vector<double> y = b;
    std::vector<double> v(static_cast<std::size_t>(m));

    for (int k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (int i = k; i < m; ++i) {
            v[i] = R(i, k);
            norm2 += v[i] * v[i];
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0)
            continue; // column already zero; the rank check below fires
        const double alpha = (v[k] > 0.0) ? -norm : norm;
        v[k] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k; i < m; ++i)
            vnorm2 += v[i] * v[i];
        if (vnorm2 > 0.0) {
            const double beta = 2.0 / vnorm2;
            for (int j = k; j < n; ++j) {
                double dot = 0.0;
                for (int i = k; i < m; ++i)
                    dot += v[i] * R(i, j);
                dot *= beta;
                for (int i = k; i < m; ++i)
                    R(i, j) -= dot * v[i];
            }
            double dot = 0.0;
            for (int i = k; i < m; ++i)
                dot += v[i] * y[i];
            dot *= beta;
            for (int i = k; i < m; ++i)
                y[i] -= dot * v[i];
        }
        R(k, k) = alpha;
    }

    double diag_max = 0.0;
    for (int k = 0; k < n; ++k)
        diag_max = std::max(diag_max, std::fabs(R(k, k)));
    if (diag_max == 0.0)
        throw std::runtime_error("least_squares: zero matrix is rank deficient");
    for (int k = 0; k < n; ++k)
        if (std::fabs(R(k, k)) < 1e-12 * diag_max)
            throw std::runtime_error("least_squares: matrix is numerically rank deficient (|R_" +
                                     std::to_string(k) + std::to_string(k) + "| < 1e-12 max |R_jj|)");

    std::vector<double> x(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        double s = y[k];
        for (int j = k + 1; j < n; ++j)
            s -= R(k, j) * x[j];
        x[k] = s / R(k, k);
    }
    return x;
}

double condition_number(const DenseMatrix& A)
{
    const int m = A.rows();
    const int n = A.cols();
    if (m < n)
        throw std::invalid_argument("condition_number: need rows >= cols");

    DenseMatrix B = A;
    double fro2 = 0.0;
    for (double e : B.entries())
        fro2 += e * e;
    if (fro2 == 0.0)
        throw std::invalid_argument("condition_number: zero matrix");
    const double tol = 1e-14 * std::sqrt(fro2);

    // One-sided Jacobi: orthogonalise column pairs until the off-diagonal
    // norm of the implicit Gram matrix drops below tol (or stalls at the
    // roundoff floor).
    double prev_off = std::numeric_limits<double>::max();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off2 = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < m; ++i) {
                    app += B(i, p) * B(i, p);
                    aqq += B(i, q) * B(i, q);
                    apq += B(i, p) * B(i, q);
                }
                off2 += 2.0 * apq * apq;
                if (apq == 0.0)
                    continue;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < m; ++i) {
                    const double bp = B(i, p);
                    const double bq = B(i, q);
                    B(i, p) = c * bp - s * bq;
                    B(i, q) = s * bp + c * bq;
                }
            }
        }
        const double off = std::sqrt(off2);
        if (off <= tol || (sweep >= 3 && off >= prev_off))
            break;
        prev_off = off;
    }

    double smax = 0.0;
    double smin = std::numeric_limits<double>::max();
    for (int j = 0; j < n; ++j) {
        double col2 = 0.0;
        for (int i = 0; i < m; ++i)
            col2 += B(i, j) * B(i, j);
        const double sigma = std::sqrt(col2);
        smax = std::max(smax, sigma);
        smin = std::min(smin, sigma);
    }
    if (smin <= 1e-14 * smax)
        throw std::runtime_error("condition_number: sigma_min vanishes within tolerance "
                                 "(condition number is effectively infinite)");
    return smax / smin;
}

} // namespace fracollo
