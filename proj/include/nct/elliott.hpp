#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nct/skewmat.hpp"

namespace nct {

// Trace-range lattice of an n-torus parameter: one generator per even subset
// of {1..n} (the empty subset contributes the constant 1), ordered graded-
// lexicographically. 2^(n-1) generators in total.
struct TraceLattice {
    int n = 0;
    Backend backend = Backend::rational;
    std::vector<std::pair<std::vector<int>, Scalar>> generators;
};

// The signed matching sum over the constrained permutations xi of S_{2m}
// (xi(2s-1) < xi(2s), xi(1) < xi(3) < ... < xi(2m-1)), i.e. over perfect
// matchings of the subset, with sign (-1)^{|xi|}. Empty subset -> 1.
// `subset` is 1-based and strictly increasing.
Scalar elliott_generator(const SkewMatrix& theta, const std::vector<int>& subset);

// Number of matchings summed for a subset of size 2m: (2m-1)!!.
long matching_count(int two_m);

TraceLattice trace_lattice(const SkewMatrix& theta);

// Canonical form of a finitely generated subgroup of Q: the subgroup equals
// generator * Z with generator = g/d in lowest terms (0 for the zero lattice).
struct LatticeReduction {
    Rational generator;
};
LatticeReduction rational_lattice_reduce(const TraceLattice& lattice);

// Basis certificate in the symbolic totally-irrational model: asserts that
// the 2^(n-1) generators are Q-linearly independent (rank = 2^(n-1)) and that
// each matching-sum generator equals the corresponding pfaffian minor exactly.
struct BasisCertificate {
    bool pass = false;
    int rank = 0;
    int expected_rank = 0;
    // First subset whose generator is Q-dependent on its predecessors (on failure).
    std::optional<std::vector<int>> witness;
    std::string detail;
};
BasisCertificate basis_certificate(const SkewMatrix& theta);

} // namespace nct
