#include "nct/dense.hpp"

#include <cmath>

namespace nct {

DenseMatrix::DenseMatrix(int rows, int cols, Backend b)
    : rows_(rows), cols_(cols), backend_(b), a_(size_t(rows) * cols, Scalar::zero(b)) {}

DenseMatrix DenseMatrix::identity(int n, Backend b) {
    DenseMatrix m(n, n, b);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(b);
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix product dimension mismatch");
    DenseMatrix r(rows_, o.cols_, backend_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sum dimension mismatch");
    DenseMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix diff dimension mismatch");
    DenseMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix r(cols_, rows_, backend_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Scalar DenseMatrix::det() const {
    if (rows_ != cols_) throw dimension_error("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return Scalar::one(backend_);
    DenseMatrix m = *this;
    int sign = 1;

    if (backend_ == Backend::real) {
        // LU with partial pivoting.
        double det = 1.0;
        for (int k = 0; k < n; ++k) {
            int piv = k;
            double best = std::fabs(m.at(k, k).as_real());
            for (int r = k + 1; r < n; ++r) {
                double v = std::fabs(m.at(r, k).as_real());
                if (v > best) best = v, piv = r;
            }
            if (best == 0.0) return Scalar::real(0.0);
            if (piv != k) {
                for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
                sign = -sign;
            }
            det *= m.at(k, k).as_real();
            for (int r = k + 1; r < n; ++r) {
                double f = m.at(r, k).as_real() / m.at(k, k).as_real();
                for (int j = k; j < n; ++j)
                    m.at(r, j) = Scalar::real(m.at(r, j).as_real() - f * m.at(k, j).as_real());
            }
        }
        return Scalar::real(sign * det);
    }

    // Bareiss fraction-free elimination; all divisions are exact in the
    // coefficient ring (including the polynomial backend).
    Scalar prev = Scalar::one(backend_);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Scalar::zero(backend_);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    Scalar d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

DenseMatrix DenseMatrix::inverse() const {
    if (rows_ != cols_) throw dimension_error("inverse of non-square matrix");
    int n = rows_;
    DenseMatrix m = *this;
    DenseMatrix inv = identity(n, backend_);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        if (backend_ == Backend::real) {
            double best = 0;
            for (int r = k; r < n; ++r) {
                double v = std::fabs(m.at(r, k).as_real());
                if (v > best) best = v, piv = r;
            }
        } else {
            for (int r = k; r < n; ++r)
                if (!m.at(r, k).is_zero()) {
                    piv = r;
                    break;
                }
        }
        if (piv < 0 || m.at(piv, k).is_zero()) throw arithmetic_error("matrix is singular");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(k, j), m.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Scalar d = m.at(k, k);
        for (int j = 0; j < n; ++j) {
            m.at(k, j) = m.at(k, j) / d;
            inv.at(k, j) = inv.at(k, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == k || m.at(r, k).is_zero()) continue;
            Scalar f = m.at(r, k);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(k, j);
                inv.at(r, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

} // namespace nct
