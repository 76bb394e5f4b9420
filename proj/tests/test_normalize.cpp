#include <doctest.h>

#include <random>

#include "nct/normalize.hpp"

using namespace nct;

namespace {

SkewMatrix random_rational_skew(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::vector<Scalar> upper;
    for (int k = 0; k < n * (n - 1) / 2; ++k) upper.push_back(Scalar::rational(num(rng), den(rng)));
    return SkewMatrix::from_upper(n, upper);
}

} // namespace

TEST_CASE("Z matrix shape and small values") {
    auto z2 = z_matrix(2);
    CHECK(z2.at(0, 1) == Scalar::rational(1));
    CHECK(z2.at(1, 0) == Scalar::rational(-1));

    auto z4 = z_matrix(4);
    CHECK(pfaffian(z4) == Scalar::rational(1)); // 1*1 - 1*1 + 1*1

    CHECK_THROWS_AS(z_matrix(0), dimension_error);
}

TEST_CASE("every pfaffian minor of Z equals 1") {
    for (int n = 2; n <= 8; ++n) {
        auto z = z_matrix(n);
        for (const auto& [s, v] : all_pfaffian_minors(z)) CHECK(v == Scalar::rational(1));
    }
}

TEST_CASE("shift polynomials are monic of the stated degree") {
    std::mt19937_64 rng(42);
    auto A = random_rational_skew(6, rng);
    auto polys = shift_polynomials(A);
    CHECK(polys.size() == 32);
    for (const auto& [s, p] : polys) {
        unsigned l = s.size() / 2;
        CHECK(p.degree() == l);
        if (!s.empty()) {
            // leading coefficient exactly 1
            CHECK(p.terms().begin()->second == Rational(1));
            CHECK(p.terms().begin()->first.degree() == l);
        }
    }
}

TEST_CASE("n=2 shift polynomial is t + a12") {
    auto A = SkewMatrix::from_upper(2, {Scalar::rational(3, 7)});
    auto polys = shift_polynomials(A);
    REQUIRE(polys.size() == 2);
    Polynomial want = Polynomial::variable("t") + Polynomial(Rational(3, 7));
    CHECK(polys[1].second == want);
}

TEST_CASE("zero matrix shift polynomials are pure powers") {
    auto A = SkewMatrix::zero(6, Backend::rational);
    for (const auto& [s, p] : shift_polynomials(A)) {
        unsigned l = s.size() / 2;
        Polynomial want(Rational(1));
        for (unsigned i = 0; i < l; ++i) want = want * Polynomial::variable("t");
        CHECK(p == want);
    }
}

TEST_CASE("shift polynomial evaluation matches direct minors for t in 0..5") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 6; ++it) {
        int n = 4 + 2 * (it % 2);
        auto A = random_rational_skew(n, rng);
        auto polys = shift_polynomials(A);
        for (long t = 0; t <= 5; ++t) {
            auto shifted = A + z_matrix(n).scale(Scalar::rational(t));
            auto minors = all_pfaffian_minors(shifted);
            REQUIRE(minors.size() == polys.size());
            for (size_t k = 0; k < minors.size(); ++k) {
                auto val = polys[k].second.substitute({{"t", Rational(t)}});
                REQUIRE(val.is_constant());
                CHECK(Scalar::rational(val.constant_value()) == minors[k].second);
            }
        }
    }
}

TEST_CASE("find_positive_shift examples") {
    // all minors already positive -> t = 0
    auto pos = SkewMatrix::from_upper(4, {Scalar::rational(2), Scalar::rational(1, 2),
                                          Scalar::rational(1, 3), Scalar::rational(1, 4),
                                          Scalar::rational(1, 5), Scalar::rational(3)});
    // pf = 2*3 - (1/2)(1/5) + (1/3)(1/4) > 0, all 2-minors positive
    CHECK(find_positive_shift(pos).t == 0);

    // zero matrix -> t = 1
    CHECK(find_positive_shift(SkewMatrix::zero(5, Backend::rational)).t == 1);

    // block J0 of size 4 -> minor {1,3} is 0 at t=0; t = 1 works
    auto j0 = SkewMatrix::j0_blockdiag(2, 0, Backend::rational);
    auto rep = find_positive_shift(j0);
    CHECK(rep.t == 1);
    for (const auto& [s, v] : rep.minors_at_t)
        if (!s.empty()) CHECK(v.sign() > 0);
}

TEST_CASE("find_positive_shift minimality and positivity, randomized") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 10; ++it) {
        auto A = random_rational_skew(6, rng);
        auto rep = find_positive_shift(A);
        CHECK(rep.t <= rep.cauchy_bound + 1);
        for (const auto& [s, v] : rep.minors_at_t)
            if (!s.empty()) CHECK(v.sign() > 0);
        if (rep.t >= 1) {
            auto prev = A + z_matrix(6).scale(Scalar::rational(rep.t - 1));
            bool some_nonpositive = false;
            for (const auto& [s, v] : all_pfaffian_minors(prev))
                if (!s.empty() && v.sign() <= 0) some_nonpositive = true;
            CHECK(some_nonpositive);
        }
    }
}
