#pragma once

#include <vector>

namespace fracollo {

// Dense row-major matrix. The collocation systems here are at most a few
// hundred rows, so there is no blocking or sparsity.
class DenseMatrix {
public:
    DenseMatrix(int rows, int cols);
    DenseMatrix(int rows, int cols, std::vector<double> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }

    const std::vector<double>& entries() const { return data_; }

private:
    int rows_;
    int cols_;
    std::vector<double> data_;
};

// Minimiser of ||A x - b||_2 by Householder QR (exact solver when the
// system is square). Throws when A is numerically rank deficient, i.e.
// some |R_ii| < 1e-12 max_j |R_jj|.
std::vector<double> least_squares(const DenseMatrix& A, const std::vector<double>& b);

// Spectral condition number sigma_max / sigma_min via one-sided Jacobi SVD.
// Throws when sigma_min vanishes within tolerance (infinite condition).
double condition_number(const DenseMatrix& A);

} // namespace fracollo
