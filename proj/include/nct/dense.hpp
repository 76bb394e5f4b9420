#pragma once

#include <vector>

#include "nct/scalar.hpp"

namespace nct {

// Minimal dense matrix of Scalars, backend-uniform. Exact backends get
// fraction-free (Bareiss) determinants and exact Gauss-Jordan inverses;
// the real backend uses partially pivoted elimination.
class DenseMatrix {
  public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols, Backend b);

    static DenseMatrix identity(int n, Backend b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Backend backend() const { return backend_; }

    Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix transpose() const;

    Scalar det() const;
    DenseMatrix inverse() const; // throws arithmetic_error if singular

  private:
    int rows_, cols_;
    Backend backend_ = Backend::rational;
    std::vector<Scalar> a_;
};

} // namespace nct
