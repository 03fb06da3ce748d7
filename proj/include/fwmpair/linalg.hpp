#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fwmpair::linalg {

using cdouble = std::complex<double>;

// Dense row-major complex matrix.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cdouble* row(std::size_t i) { return data_.data() + i * cols_; }
    const cdouble* row(std::size_t i) const { return data_.data() + i * cols_; }

    cdouble* data() { return data_.data(); }
    const cdouble* data() const { return data_.data(); }

    double frobenius_norm() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cdouble> data_;
};

// G = A A^H (Hermitian, both triangles filled). Rows of A whose largest
// magnitude is below zero_tol * max|A| are skipped as exact zeros.
CMatrix gram(const CMatrix& a, double zero_tol = 0.0);

double trace_real(const CMatrix& hermitian);

// Re tr(G1 G2) for Hermitian G1, G2 (elementwise sum of G1 .* conj(G2)).
double trace_product_hermitian(const CMatrix& g1, const CMatrix& g2);

// Squared Frobenius norm of a Hermitian matrix = sum of eigenvalue squares.
double frobenius_sq(const CMatrix& m);

// Singular values of a general complex matrix, descending. Householder
// bidiagonalization followed by implicit-shift QR on the bidiagonal.
std::vector<double> singular_values(const CMatrix& a);

}  // namespace fwmpair::linalg
