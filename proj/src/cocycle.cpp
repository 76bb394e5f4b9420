#include "nct/cocycle.hpp"

#include <cmath>
#include <random>

namespace nct {

Scalar phase_mod1(const Scalar& x) {
    switch (x.backend()) {
        case Backend::rational: {
            const Rational& r = x.as_rational();
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
            return Scalar::rational(Rational(r - Rational(fl)));
        }
        case Backend::real: {
            double v = x.as_real();
            double f = v - std::floor(v);
            if (f >= 1.0) f = 0.0;
            return Scalar::real(f);
        }
        case Backend::polynomial:
            throw backend_error("phases are rational or float, not symbolic");
    }
    throw error("bad backend");
}

namespace {

Scalar dot_theta(const SkewMatrix& theta, const IntVec& x, const IntVec& y) {
    int n = theta.n();
    if ((int)x.size() != n || (int)y.size() != n)
        throw dimension_error("cocycle argument dimension mismatch");
    Scalar acc = Scalar::zero(theta.backend());
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        Scalar row = Scalar::zero(theta.backend());
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            if (theta.backend() == Backend::real)
                row = Scalar::real(row.as_real() + theta.at(i, j).as_real() * double(y[j]));
            else
                row += theta.at(i, j) * Scalar::rational(y[j]);
        }
        if (theta.backend() == Backend::real)
            acc = Scalar::real(acc.as_real() + row.as_real() * double(x[i]));
        else
            acc += row * Scalar::rational(x[i]);
    }
    return acc;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool phase_equal(const Scalar& a, const Scalar& b) {
    if (a.backend() == Backend::real) {
        double d = phase_mod1(Scalar::real(a.as_real() - b.as_real())).as_real();
        return d < 1e-12 || d > 1.0 - 1e-12;
    }
    return phase_mod1(a) == phase_mod1(b);
}

} // namespace

Scalar cocycle_phase(const SkewMatrix& theta, const IntVec& x, const IntVec& y) {
    Scalar v = dot_theta(theta, x, y);
    if (theta.backend() == Backend::real)
        return phase_mod1(Scalar::real(v.as_real() / 2.0));
    return phase_mod1(v / Scalar::rational(2));
}

PhaseCocycle::PhaseCocycle(SkewMatrix theta) : theta_(std::move(theta)) {}

Scalar PhaseCocycle::phase(const IntVec& x, const IntVec& y) const {
    auto ov = overrides_.find(std::make_pair(x, y));
    if (ov != overrides_.end()) return ov->second;
    Scalar v = cocycle_phase(theta_, x, y);
    for (const auto& f : coboundaries_) {
        Scalar fx = f(x), fy = f(y), fxy = f(add(x, y));
        v = phase_mod1(v + fx + fy - fxy);
    }
    return v;
}

PhaseCocycle PhaseCocycle::twisted(std::function<Scalar(const IntVec&)> f) const {
    IntVec zero(theta_.n(), 0);
    if (!f(zero).is_zero()) throw precondition_error("coboundary requires f(0) = 0");
    PhaseCocycle out = *this;
    out.coboundaries_.push_back(std::move(f));
    return out;
}

PhaseCocycle PhaseCocycle::with_override(const IntVec& x, const IntVec& y, Scalar value) const {
    PhaseCocycle out = *this;
    out.overrides_[std::make_pair(x, y)] = std::move(value);
    return out;
}

CocycleCheck verify_cocycle(const PhaseCocycle& omega,
                            const std::vector<std::array<IntVec, 3>>& triples) {
    CocycleCheck res;
    IntVec zero(omega.n(), 0);
    for (const auto& [x, y, z] : triples) {
        ++res.triples_checked;
        Scalar lhs = omega.phase(x, y) + omega.phase(add(x, y), z);
        Scalar rhs = omega.phase(x, add(y, z)) + omega.phase(y, z);
        bool ok = phase_equal(lhs, rhs);
        ok = ok && omega.phase(x, zero).is_zero() && omega.phase(zero, x).is_zero();
        if (!ok) {
            res.pass = false;
            res.witness = {x, y, z};
            return res;
        }
    }
    return res;
}

CocycleCheck verify_cocycle_box(const SkewMatrix& theta, int radius) {
    if (theta.backend() != Backend::rational)
        throw backend_error("exhaustive box verification requires a rational matrix");
    int n = theta.n();

    // Common denominator D and integer matrix N = D * theta. The unreduced
    // identity (x.Ny) + ((x+y).Nz) - (x.N(y+z)) - (y.Nz) = 0 is an exact
    // integer identity, so the box runs in long arithmetic with no mod.
    mpz_class D(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            mpz_class den = theta.at(i, j).as_rational().get_den();
            D = D * den / gcd(D, den);
        }
    std::vector<long> N(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational scaled = theta.at(i, j).as_rational() * Rational(D);
            if (scaled.get_den() != 1) throw error("denominator clearing failed");
            if (!scaled.get_num().fits_slong_p())
                throw precondition_error("matrix entries too large for the box fast path");
            N[size_t(i) * n + j] = scaled.get_num().get_si();
        }

    int side = 2 * radius + 1;
    long count = 1;
    for (int i = 0; i < n; ++i) count *= side;

    auto unpack = [&](long code, IntVec& v) {
        for (int i = 0; i < n; ++i) {
            v[i] = code % side - radius;
            code /= side;
        }
    };
    auto form = [&](const IntVec& a, const IntVec& b) {
        long acc = 0;
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            long row = 0;
            for (int j = 0; j < n; ++j) row += N[size_t(i) * n + j] * b[j];
            acc += a[i] * row;
        }
        return acc;
    };

    CocycleCheck res;
    IntVec x(n), y(n), z(n), xy(n), yz(n);
    for (long cx = 0; cx < count; ++cx) {
        unpack(cx, x);
        for (long cy = 0; cy < count; ++cy) {
            unpack(cy, y);
            for (int i = 0; i < n; ++i) xy[i] = x[i] + y[i];
            long fxy = form(x, y);
            for (long cz = 0; cz < count; ++cz) {
                unpack(cz, z);
                for (int i = 0; i < n; ++i) yz[i] = y[i] + z[i];
                ++res.triples_checked;
                long defect = fxy + form(xy, z) - form(x, yz) - form(y, z);
                if (defect != 0) {
                    res.pass = false;
                    res.witness = {x, y, z};
                    return res;
                }
            }
        }
    }

    // Tie the fast path to the public phase API on a random subsample.
    PhaseCocycle omega(theta);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> pick(0, count - 1);
    IntVec zero(n, 0);
    for (int it = 0; it < 200; ++it) {
        unpack(pick(rng), x);
        unpack(pick(rng), y);
        unpack(pick(rng), z);
        for (int i = 0; i < n; ++i) xy[i] = x[i] + y[i];
        for (int i = 0; i < n; ++i) yz[i] = y[i] + z[i];
        Scalar lhs = omega.phase(x, y) + omega.phase(xy, z);
        Scalar rhs = omega.phase(x, yz) + omega.phase(y, z);
        if (!(phase_mod1(lhs) == phase_mod1(rhs)) || !omega.phase(x, zero).is_zero() ||
            !omega.phase(zero, y).is_zero()) {
            res.pass = false;
            res.witness = {x, y, z};
            return res;
        }
    }
    return res;
}

std::vector<Scalar> cohomology_invariant(const SkewMatrix& theta) {
    std::vector<Scalar> inv;
    for (int j = 0; j < theta.n(); ++j)
        for (int k = j + 1; k < theta.n(); ++k) inv.push_back(phase_mod1(theta.at(j, k)));
    return inv;
}

std::vector<Scalar> cohomology_invariant(const PhaseCocycle& omega) {
    // Antisymmetrized evaluation on basis pairs: phase(e_j,e_k) - phase(e_k,e_j)
    // equals theta_{jk} mod 1 and kills every coboundary contribution.
    int n = omega.n();
    std::vector<Scalar> inv;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            IntVec ej(n, 0), ek(n, 0);
            ej[j] = 1;
            ek[k] = 1;
            inv.push_back(phase_mod1(omega.phase(ej, ek) - omega.phase(ek, ej)));
        }
    return inv;
}

SkewMatrix dual_parameter(const SkewMatrix& gamma) {
    int p = gamma.p(), q = gamma.q(); // throws without a split
    int n = gamma.n();
    if (gamma.backend() == Backend::polynomial)
        throw backend_error("dual parameter requires the rational or float backend");

    DenseMatrix g11 = gamma.block(0, 2 * p, 0, 2 * p);
    DenseMatrix g12 = gamma.block(0, 2 * p, 2 * p, n);
    DenseMatrix g21 = gamma.block(2 * p, n, 0, 2 * p);
    DenseMatrix g22 = gamma.block(2 * p, n, 2 * p, n);

    DenseMatrix inv11(0, 0, gamma.backend());
    try {
        inv11 = g11.inverse();
    } catch (const arithmetic_error&) {
        throw precondition_error("dual parameter requires an invertible leading block");
    }

    DenseMatrix out(n, n, gamma.backend());
    DenseMatrix b12 = inv11 * g12;
    DenseMatrix b21 = g21 * inv11;
    DenseMatrix b22 = g22 - b21 * g12;
    for (int i = 0; i < 2 * p; ++i) {
        for (int j = 0; j < 2 * p; ++j) out.at(i, j) = inv11.at(i, j);
        for (int j = 0; j < q; ++j) out.at(i, 2 * p + j) = -b12.at(i, j);
    }
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < 2 * p; ++j) out.at(2 * p + i, j) = b21.at(i, j);
        for (int j = 0; j < q; ++j) out.at(2 * p + i, 2 * p + j) = b22.at(i, j);
    }

    // The block formula is skew in exact arithmetic; verify, then rebuild from
    // the upper triangle so float rounding cannot break construction.
    std::vector<Scalar> upper;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (gamma.backend() == Backend::rational) {
                if (!(out.at(i, j) == -out.at(j, i)))
                    throw error("dual parameter lost skew-symmetry");
                upper.push_back(out.at(i, j));
            } else {
                double a = out.at(i, j).as_real(), b = out.at(j, i).as_real();
                double scale = 1.0 + std::fabs(a) + std::fabs(b);
                if (std::fabs(a + b) > 1e-9 * scale)
                    throw error("dual parameter lost skew-symmetry");
                upper.push_back(Scalar::real(0.5 * (a - b)));
            }
        }
    return SkewMatrix::from_upper(n, upper, std::make_pair(p, q));
}

} // namespace nct
