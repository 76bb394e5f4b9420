#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nct/skewmat.hpp"

namespace nct {

// The n x n skew matrix with every entry above the diagonal equal to 1.
SkewMatrix z_matrix(int n, Backend b = Backend::rational);

// Every pfaffian minor of A + tZ as a polynomial in the shift indeterminate;
// the minor on a subset of size 2l is monic of degree l.
std::vector<std::pair<std::vector<int>, Polynomial>> shift_polynomials(
    const SkewMatrix& A, const std::string& shift_var = "t");

struct ShiftReport {
    long t = 0;                    // minimal non-negative shift
    long cauchy_bound = 0;         // termination bound used by the search
    std::vector<std::pair<std::vector<int>, Scalar>> minors_at_t; // all positive
    std::vector<std::pair<std::vector<int>, Polynomial>> polynomials;
};

// Minimal integer t >= 0 such that every nonempty pfaffian minor of A + tZ is
// strictly positive. Terminates within 1 + max over subsets of the Cauchy
// bound of the (monic) shift polynomial.
ShiftReport find_positive_shift(const SkewMatrix& A);

} // namespace nct
