#include "nct/normalize.hpp"

#include <cmath>

namespace nct {

SkewMatrix z_matrix(int n, Backend b) {
    if (n < 1) throw dimension_error("z_matrix requires n >= 1");
    std::vector<Scalar> upper(size_t(n) * (n - 1) / 2, Scalar::one(b));
    return SkewMatrix::from_upper(n, upper);
}

std::vector<std::pair<std::vector<int>, Polynomial>> shift_polynomials(
    const SkewMatrix& A, const std::string& shift_var) {
    if (A.backend() != Backend::rational)
        throw backend_error("shift polynomials require exact rational entries");
    int n = A.n();
    // entries a_ij + t above the diagonal, as polynomials in the shift variable
    std::vector<Scalar> upper;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            upper.push_back(Scalar::polynomial(Polynomial(A.at(i, j).as_rational()) +
                                               Polynomial::variable(shift_var)));
    SkewMatrix shifted = SkewMatrix::from_upper(n, upper);

    std::vector<std::pair<std::vector<int>, Polynomial>> out;
    for (const auto& [s, v] : all_pfaffian_minors(shifted))
        out.emplace_back(s, v.as_polynomial());
    return out;
}

ShiftReport find_positive_shift(const SkewMatrix& A) {
    if (A.backend() != Backend::rational)
        throw backend_error("positive-shift search requires exact rational entries");
    ShiftReport rep;
    rep.polynomials = shift_polynomials(A);

    // Cauchy-style bound: a monic x^l + sum c_i x^i is positive for every
    // x > 1 + max |c_i|; take the max over all subsets.
    Rational bound(0);
    for (const auto& [s, p] : rep.polynomials) {
        for (const auto& [m, c] : p.terms()) {
            Rational a = abs(c);
            if (a > bound) bound = a;
        }
    }
    rep.cauchy_bound = (long)std::ceil(Rational(bound + 1).get_d());

    SkewMatrix Z = z_matrix(A.n(), Backend::rational);
    for (long t = 0;; ++t) {
        if (t > rep.cauchy_bound + 1)
            throw error("positive-shift search exceeded its termination bound"); // unreachable
        SkewMatrix shifted = A + Z.scale(Scalar::rational(t));
        bool all_positive = true;
        std::vector<std::pair<std::vector<int>, Scalar>> minors = all_pfaffian_minors(shifted);
        for (const auto& [s, v] : minors) {
            if (s.empty()) continue;
            if (v.sign() <= 0) {
                all_positive = false;
                break;
            }
        }
        if (all_positive) {
            rep.t = t;
            rep.minors_at_t = std::move(minors);
            return rep;
        }
    }
}

} // namespace nct
