#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nct/dense.hpp"
#include "nct/scalar.hpp"

namespace nct {

// Skew-symmetric n x n matrix over a single scalar backend, with an optional
// block split n = 2p + q (the leading 2p x 2p block is the "11" corner).
// Construction checks A^T = -A and a zero diagonal.
class SkewMatrix {
  public:
    // `backend_hint` only matters for n = 0, where there is no entry to
    // infer the backend from.
    SkewMatrix(int n, std::vector<Scalar> entries,
               std::optional<std::pair<int, int>> split = std::nullopt,
               Backend backend_hint = Backend::rational);

    // Build from the strict upper triangle in row-major order; the lower
    // triangle and the zero diagonal are derived.
    static SkewMatrix from_upper(int n, const std::vector<Scalar>& upper,
                                 std::optional<std::pair<int, int>> split = std::nullopt);
    static SkewMatrix zero(int n, Backend b);
    // Block-diagonal J0: p copies of [[0,1],[-1,0]] padded with q zero rows/cols.
    static SkewMatrix j0_blockdiag(int p, int q, Backend b);

    int n() const { return n_; }
    bool has_split() const { return split_.has_value(); }
    int p() const;
    int q() const;
    Backend backend() const { return backend_; }

    const Scalar& at(int i, int j) const { return a_[size_t(i) * n_ + j]; } // 0-based

    // Submatrix on 0-based strictly increasing indices (rows and columns).
    SkewMatrix submatrix(const std::vector<int>& idx) const;
    DenseMatrix block(int r0, int r1, int c0, int c1) const; // half-open, 0-based
    DenseMatrix dense() const;

    SkewMatrix with_split(int p, int q) const;
    SkewMatrix to_real() const;

    SkewMatrix operator+(const SkewMatrix& o) const;
    SkewMatrix scale(const Scalar& c) const;
    bool operator==(const SkewMatrix& o) const;

  private:
    int n_;
    std::optional<std::pair<int, int>> split_;
    Backend backend_;
    std::vector<Scalar> a_;
};

// Pfaffian, normalized by pf(J0) = 1 for the block-diagonal J0. Signed
// first-row expansion (with subset memoization) on exact backends; an
// O(n^3) skew-tridiagonalization path on the real backend. Odd n gives 0,
// n = 0 gives 1.
Scalar pfaffian(const SkewMatrix& A);

// Exact determinant via fraction-free elimination on exact backends, LU on real.
Scalar determinant(const SkewMatrix& A);

// Pfaffian of the submatrix on a 1-based, strictly increasing index list of
// even length. The empty list gives 1.
Scalar pfaffian_minor(const SkewMatrix& A, const std::vector<int>& indices);

// All pfaffian minors, one per even subset of {1..n} including the empty
// subset, in graded-lexicographic subset order. Exactly 2^(n-1) entries.
std::vector<std::pair<std::vector<int>, Scalar>> all_pfaffian_minors(const SkewMatrix& A);

// All even-size subsets of {1..n} (1-based), graded-lex order: by size, then
// lexicographically.
std::vector<std::vector<int>> even_subsets(int n);

// P^T A P for the signed permutation P with P e_j = signs[j] e_{perm[j]}
// (perm and signs are 0-based arrays; perm[j] is the 0-based image of j;
// signs entries are +1/-1). Concretely result(i,j) = s_i s_j A(perm[i], perm[j]).
SkewMatrix signed_permutation_congruence(const SkewMatrix& A, const std::vector<int>& perm,
                                         const std::vector<int>& signs);

// Determinant of the signed permutation matrix: sgn(perm) * prod(signs).
int signed_permutation_det(const std::vector<int>& perm, const std::vector<int>& signs);

// B^T A B for an arbitrary square matrix B over the same backend.
SkewMatrix congruence(const SkewMatrix& A, const DenseMatrix& B);

} // namespace nct
