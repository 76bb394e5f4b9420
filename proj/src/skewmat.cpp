#include "nct/skewmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

namespace nct {

SkewMatrix::SkewMatrix(int n, std::vector<Scalar> entries,
                       std::optional<std::pair<int, int>> split, Backend backend_hint)
    : n_(n), split_(split), a_(std::move(entries)) {
    if (n < 0) throw dimension_error("negative dimension");
    if (a_.size() != size_t(n) * n) throw dimension_error("entry count != n*n");
    backend_ = n > 0 ? a_[0].backend() : backend_hint;
    for (const auto& s : a_)
        if (s.backend() != backend_) throw backend_error("mixed backends in matrix");
    for (int i = 0; i < n; ++i) {
        if (!at(i, i).is_zero()) throw dimension_error("nonzero diagonal entry in skew matrix");
        for (int j = i + 1; j < n; ++j)
            if (!(at(i, j) == -at(j, i)))
                throw dimension_error("matrix is not skew-symmetric");
    }
    if (split_) {
        auto [p, q] = *split_;
        if (p < 0 || q < 0 || 2 * p + q != n) throw dimension_error("invalid block split: n != 2p+q");
    }
}

SkewMatrix SkewMatrix::from_upper(int n, const std::vector<Scalar>& upper,
                                  std::optional<std::pair<int, int>> split) {
    if ((int)upper.size() != n * (n - 1) / 2)
        throw dimension_error("upper triangle needs n*(n-1)/2 entries");
    Backend b = upper.empty() ? Backend::rational : upper[0].backend();
    std::vector<Scalar> a(size_t(n) * n, Scalar::zero(b));
    size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a[size_t(i) * n + j] = upper[k];
            a[size_t(j) * n + i] = -upper[k];
            ++k;
        }
    return SkewMatrix(n, std::move(a), split);
}

SkewMatrix SkewMatrix::zero(int n, Backend b) {
    return SkewMatrix(n, std::vector<Scalar>(size_t(n) * n, Scalar::zero(b)));
}

SkewMatrix SkewMatrix::j0_blockdiag(int p, int q, Backend b) {
    int n = 2 * p + q;
    std::vector<Scalar> a(size_t(n) * n, Scalar::zero(b));
    for (int k = 0; k < p; ++k) {
        a[size_t(2 * k) * n + (2 * k + 1)] = Scalar::one(b);
        a[size_t(2 * k + 1) * n + (2 * k)] = -Scalar::one(b);
    }
    return SkewMatrix(n, std::move(a), std::make_pair(p, q));
}

int SkewMatrix::p() const {
    if (!split_) throw dimension_error("matrix has no block split");
    return split_->first;
}

int SkewMatrix::q() const {
    if (!split_) throw dimension_error("matrix has no block split");
    return split_->second;
}

SkewMatrix SkewMatrix::submatrix(const std::vector<int>& idx) const {
    int m = (int)idx.size();
    for (int k = 0; k < m; ++k) {
        if (idx[k] < 0 || idx[k] >= n_) throw dimension_error("submatrix index out of range");
        if (k > 0 && idx[k] <= idx[k - 1])
            throw dimension_error("submatrix indices must be strictly increasing");
    }
    std::vector<Scalar> a;
    a.reserve(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a.push_back(at(idx[i], idx[j]));
    return SkewMatrix(m, std::move(a), std::nullopt, backend_);
}

DenseMatrix SkewMatrix::block(int r0, int r1, int c0, int c1) const {
    DenseMatrix m(r1 - r0, c1 - c0, backend_);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

DenseMatrix SkewMatrix::dense() const { return block(0, n_, 0, n_); }

SkewMatrix SkewMatrix::with_split(int p, int q) const {
    return SkewMatrix(n_, a_, std::make_pair(p, q));
}

SkewMatrix SkewMatrix::to_real() const {
    std::vector<Scalar> a;
    a.reserve(a_.size());
    for (const auto& s : a_) a.push_back(s.to_real());
    return SkewMatrix(n_, std::move(a), split_);
}

SkewMatrix SkewMatrix::operator+(const SkewMatrix& o) const {
    if (n_ != o.n_) throw dimension_error("skew sum dimension mismatch");
    std::vector<Scalar> a(a_);
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a_[i];
    return SkewMatrix(n_, std::move(a), split_);
}

SkewMatrix SkewMatrix::scale(const Scalar& c) const {
    std::vector<Scalar> a(a_);
    for (auto& x : a) x *= c;
    return SkewMatrix(n_, std::move(a), split_);
}

bool SkewMatrix::operator==(const SkewMatrix& o) const {
    if (n_ != o.n_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

// ---------------------------------------------------------------- pfaffian

namespace {

// Signed first-row expansion over the index subset encoded in `idx`,
// memoized on the subset bitmask. pf(A) = sum_{j>=2} (-1)^j a_{1j} pf(A_{1^,j^}).
Scalar pf_expand(const SkewMatrix& A, std::vector<int>& idx,
                 std::map<std::uint32_t, Scalar>& memo) {
    size_t m = idx.size();
    if (m == 0) return Scalar::one(A.backend());
    if (m % 2 == 1) return Scalar::zero(A.backend());
    std::uint32_t mask = 0;
    for (int i : idx) mask |= (1u << i);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    Scalar acc = Scalar::zero(A.backend());
    int i0 = idx[0];
    std::vector<int> rest(m - 2);
    for (size_t s = 1; s < m; ++s) {
        const Scalar& a = A.at(i0, idx[s]);
        if (!a.is_zero()) {
            size_t t = 0;
            for (size_t u = 1; u < m; ++u)
                if (u != s) rest[t++] = idx[u];
            Scalar sub = pf_expand(A, rest, memo);
            Scalar term = a * sub;
            // position of idx[s] in the current list is s+1 (1-based); sign (-1)^(s+1)
            acc = (s % 2 == 1) ? acc + term : acc - term;
        }
    }
    memo.emplace(mask, acc);
    return acc;
}

// Parlett-Reid style skew tridiagonalization by congruence with pivoting;
// O(n^3), real backend only.
double pf_real(const SkewMatrix& A) {
    int n = A.n();
    if (n % 2 == 1) return 0.0;
    if (n == 0) return 1.0;
    std::vector<double> m(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[size_t(i) * n + j] = A.at(i, j).as_real();
    auto e = [&](int i, int j) -> double& { return m[size_t(i) * n + j]; };

    double sign = 1.0, prod = 1.0;
    for (int k = 0; k + 1 < n; k += 2) {
        int piv = k + 1;
        double best = std::fabs(e(k + 1, k));
        for (int r = k + 2; r < n; ++r)
            if (std::fabs(e(r, k)) > best) best = std::fabs(e(r, k)), piv = r;
        if (best == 0.0) return 0.0;
        if (piv != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(e(k + 1, j), e(piv, j));
            for (int i = 0; i < n; ++i) std::swap(e(i, k + 1), e(i, piv));
            sign = -sign;
        }
        for (int r = k + 2; r < n; ++r) {
            double f = e(r, k) / e(k + 1, k);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) e(r, j) -= f * e(k + 1, j);
            for (int i = 0; i < n; ++i) e(i, r) -= f * e(i, k + 1);
        }
        prod *= e(k, k + 1);
    }
    return sign * prod;
}

} // namespace

Scalar pfaffian(const SkewMatrix& A) {
    int n = A.n();
    if (n == 0) return Scalar::one(A.backend());
    if (n % 2 == 1) return Scalar::zero(A.backend());
    if (A.backend() == Backend::real) return Scalar::real(pf_real(A));
    if (n > 12)
        throw dimension_error("exact pfaffian expansion limited to n <= 12");
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::map<std::uint32_t, Scalar> memo;
    return pf_expand(A, idx, memo);
}

Scalar determinant(const SkewMatrix& A) { return A.dense().det(); }

Scalar pfaffian_minor(const SkewMatrix& A, const std::vector<int>& indices) {
    if (indices.size() % 2 == 1)
        throw dimension_error("pfaffian minor needs an even index count");
    std::vector<int> idx0;
    idx0.reserve(indices.size());
    for (size_t k = 0; k < indices.size(); ++k) {
        int i = indices[k];
        if (i < 1 || i > A.n()) throw dimension_error("pfaffian minor index out of range");
        if (k > 0 && i <= indices[k - 1])
            throw dimension_error("pfaffian minor indices must be strictly increasing");
        idx0.push_back(i - 1);
    }
    return pfaffian(A.submatrix(idx0));
}

std::vector<std::vector<int>> even_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int size = 0; size <= n; size += 2) {
        // subsets of fixed size in lexicographic order
        std::vector<int> s(size);
        for (int i = 0; i < size; ++i) s[i] = i + 1;
        while (true) {
            out.push_back(s);
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && s[i] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++s[i];
            for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
        }
    }
    return out;
}

std::vector<std::pair<std::vector<int>, Scalar>> all_pfaffian_minors(const SkewMatrix& A) {
    std::vector<std::pair<std::vector<int>, Scalar>> out;
    for (const auto& s : even_subsets(A.n())) out.emplace_back(s, pfaffian_minor(A, s));
    return out;
}

SkewMatrix signed_permutation_congruence(const SkewMatrix& A, const std::vector<int>& perm,
                                         const std::vector<int>& signs) {
    int n = A.n();
    if ((int)perm.size() != n || (int)signs.size() != n)
        throw dimension_error("signed permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int j = 0; j < n; ++j) {
        if (perm[j] < 0 || perm[j] >= n || seen[perm[j]])
            throw dimension_error("invalid permutation");
        seen[perm[j]] = true;
        if (signs[j] != 1 && signs[j] != -1) throw dimension_error("signs must be +1 or -1");
    }
    std::vector<Scalar> a(size_t(n) * n, Scalar::zero(A.backend()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar v = A.at(perm[i], perm[j]);
            if (signs[i] * signs[j] < 0) v = -v;
            a[size_t(i) * n + j] = v;
        }
    return SkewMatrix(n, std::move(a));
}

int signed_permutation_det(const std::vector<int>& perm, const std::vector<int>& signs) {
    int n = (int)perm.size();
    int det = 1;
    for (int s : signs) det *= s;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) det = -det;
    }
    return det;
}

SkewMatrix congruence(const SkewMatrix& A, const DenseMatrix& B) {
    if (B.rows() != A.n() || B.cols() != A.n()) throw dimension_error("congruence dimension mismatch");
    DenseMatrix r = B.transpose() * A.dense() * B;
    if (A.backend() == Backend::real) {
        // Rounding can break exact antisymmetry; rebuild from the upper triangle.
        std::vector<Scalar> upper;
        for (int i = 0; i < A.n(); ++i)
            for (int j = i + 1; j < A.n(); ++j)
                upper.push_back(Scalar::real(0.5 * (r.at(i, j).as_real() - r.at(j, i).as_real())));
        return SkewMatrix::from_upper(A.n(), upper);
    }
    std::vector<Scalar> a;
    a.reserve(size_t(A.n()) * A.n());
    for (int i = 0; i < A.n(); ++i)
        for (int j = 0; j < A.n(); ++j) a.push_back(r.at(i, j));
    return SkewMatrix(A.n(), std::move(a));
}

} // namespace nct
