#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "nct/skewmat.hpp"

namespace nct {

using IntVec = std::vector<long>;

// Phases live in R/Z (exact rationals for exact parameter matrices), not in
// the unit circle, so exact-backend identities stay exact. The complex value
// e(x) = exp(2*pi*i*x) is only formed at the module layer.
Scalar phase_mod1(const Scalar& x);

// (x . theta y)/2 reduced mod 1.
Scalar cocycle_phase(const SkewMatrix& theta, const IntVec& x, const IntVec& y);

// Group 2-cocycle on Z^n given by a skew parameter matrix, optionally twisted
// by a coboundary and (for negative controls) overridden on specific pairs.
class PhaseCocycle {
  public:
    explicit PhaseCocycle(SkewMatrix theta);

    const SkewMatrix& theta() const { return theta_; }
    int n() const { return theta_.n(); }

    Scalar phase(const IntVec& x, const IntVec& y) const;

    // Cohomologous twist: phase'(x,y) = f(x) + f(y) - f(x+y) + phase(x,y).
    // f must satisfy f(0) = 0.
    PhaseCocycle twisted(std::function<Scalar(const IntVec&)> f) const;

    // Test hook: force a specific phase value on one pair.
    PhaseCocycle with_override(const IntVec& x, const IntVec& y, Scalar value) const;

  private:
    SkewMatrix theta_;
    std::vector<std::function<Scalar(const IntVec&)>> coboundaries_;
    std::map<std::pair<IntVec, IntVec>, Scalar> overrides_;
};

struct CocycleCheck {
    bool pass = true;
    long triples_checked = 0;
    std::optional<std::array<IntVec, 3>> witness; // first failing (x, y, z)
};

// Checks the 2-cocycle identity phase(x,y) + phase(x+y,z) = phase(x,y+z) +
// phase(y,z) (mod 1) and the unit normalization on the given triples.
CocycleCheck verify_cocycle(const PhaseCocycle& omega,
                            const std::vector<std::array<IntVec, 3>>& triples);

// Exhaustive check of the bilinear-cocycle identity on the box
// x,y,z in {-radius..radius}^n for an exact rational matrix, via an integer
// fast path (the unreduced identity is an exact integer identity). A random
// subsample is cross-checked against cocycle_phase.
CocycleCheck verify_cocycle_box(const SkewMatrix& theta, int radius);

// The complete cohomology-class invariant of the family: theta_{jk} mod 1 for
// j < k in lexicographic order, extracted from antisymmetrized phases so it
// is coboundary-blind.
std::vector<Scalar> cohomology_invariant(const SkewMatrix& theta);
std::vector<Scalar> cohomology_invariant(const PhaseCocycle& omega);

// The dual parameter of a split skew matrix:
// gamma' = [[g11^-1, -g11^-1 g12], [g21 g11^-1, g22 - g21 g11^-1 g12]].
// Requires the leading 2p x 2p block invertible; output carries the same split.
SkewMatrix dual_parameter(const SkewMatrix& gamma);

} // namespace nct
