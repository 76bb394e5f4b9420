#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nct/common.hpp"

namespace nct {

using Rational = mpq_class;

// Value backends. Exact backends (rational, polynomial) satisfy a+b-b == a
// bit-exactly; `real` is IEEE double.
enum class Backend { rational, real, polynomial };

std::string backend_name(Backend b);

// A monomial is a finite multiset of indeterminate names.
class Monomial {
  public:
    Monomial() = default;
    static Monomial variable(const std::string& name, unsigned exp = 1);

    bool is_one() const { return exps_.empty(); }
    unsigned degree() const;
    const std::map<std::string, unsigned>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    bool divides(const Monomial& o) const;
    // Quotient monomial; caller must check divides() first.
    Monomial divide(const Monomial& o) const;

    // Graded lexicographic order: total degree first, then variable names in
    // string order with a higher exponent on an earlier name ranking larger.
    static int cmp(const Monomial& a, const Monomial& b);

    std::string str() const;

  private:
    std::map<std::string, unsigned> exps_; // name -> exponent, no zero entries
};

struct MonomialGradedLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial over Q. Canonical form: no zero coefficients,
// terms held in descending graded-lex order.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    static Polynomial variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // throws unless is_constant()
    unsigned degree() const;

    const std::map<Monomial, Rational, MonomialGradedLexDesc>& terms() const { return terms_; }
    std::set<std::string> indeterminates() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // Exact division; throws arithmetic_error if the quotient is not a polynomial.
    Polynomial divide_exact(const Polynomial& divisor) const;

    // Substitute rationals for a subset of the indeterminates.
    Polynomial substitute(const std::map<std::string, Rational>& values) const;

    std::string str() const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational, MonomialGradedLexDesc> terms_;
};

// Tagged scalar over one of the three backends. Arithmetic requires matching
// backends; mixing is a hard error, never a silent promotion.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}

    static Scalar rational(const Rational& r) { return Scalar(r); }
    static Scalar rational(long num, long den = 1);
    static Scalar real(double x) { return Scalar(x); }
    static Scalar polynomial(const Polynomial& p) { return Scalar(p); }
    static Scalar variable(const std::string& name) { return Scalar(Polynomial::variable(name)); }
    static Scalar zero(Backend b);
    static Scalar one(Backend b);

    Backend backend() const;
    bool is_exact() const { return backend() != Backend::real; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // exact nonzero divisor or real backend
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Equality is defined within a backend; a polynomial with empty
    // indeterminate support compares equal to the corresponding rational.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    bool is_zero() const;
    // Sign of the value: -1, 0, +1. Throws for non-constant polynomials.
    int sign() const;

    const Rational& as_rational() const;
    const Polynomial& as_polynomial() const;
    double as_real() const;

    // Explicit conversion to the real backend (never implicit).
    Scalar to_real() const;
    double to_double() const;

    std::string str() const;

    // values must all be polynomial backend. Returns the rank over Q of the
    // coefficient matrix (rows = values, columns = monomials including the
    // constant monomial).
    static int rational_independence_rank(const std::vector<Scalar>& values);

    // Parse a scalar literal: `-?\d+(/\d+)?` for rationals, polynomial
    // expressions with + - * over declared symbols, decimal/scientific
    // literals for the real backend.
    static Scalar parse(const std::string& text, Backend backend,
                        const std::vector<std::string>& symbols = {});

  private:
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(double x) : v_(x) {}
    explicit Scalar(Polynomial p) : v_(std::move(p)) {}

    std::variant<Rational, double, Polynomial> v_;
};

std::string rational_str(const Rational& r);
std::string real_str(double x);

} // namespace nct
