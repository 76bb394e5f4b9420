#include "nct/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace nct {

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::rational: return "rational";
        case Backend::real: return "float";
        case Backend::polynomial: return "polynomial";
    }
    return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(const std::string& name, unsigned exp) {
    Monomial m;
    if (exp > 0) m.exps_[name] = exp;
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [name, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [name, e] : o.exps_) r.exps_[name] += e;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [name, e] : exps_) {
        auto it = o.exps_.find(name);
        if (it == o.exps_.end() || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r;
    r.exps_ = exps_;
    for (const auto& [name, e] : o.exps_) {
        auto it = r.exps_.find(name);
        if (it == r.exps_.end() || it->second < e)
            throw arithmetic_error("monomial division is not exact");
        it->second -= e;
        if (it->second == 0) r.exps_.erase(it);
    }
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Same degree: walk variables in name order; higher power on the
    // earlier name ranks larger.
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    return 0; // equal degree and identical prefix => identical
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [name, e] : exps_) {
        for (unsigned i = 0; i < e; ++i) {
            if (!s.empty()) s += "*";
            s += name;
        }
    }
    return s;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_[Monomial()] = c;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.terms_[Monomial::variable(name)] = 1;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw arithmetic_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

unsigned Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<std::string> Polynomial::indeterminates() const {
    std::set<std::string> names;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.exponents()) names.insert(name);
    return names;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw arithmetic_error("polynomial division by zero");
    Polynomial rem = *this, quot;
    const auto& [dm, dc] = *divisor.terms_.begin(); // leading term
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        if (!dm.divides(rm)) throw arithmetic_error("polynomial division is not exact");
        Polynomial t;
        t.terms_.emplace(rm.divide(dm), rc / dc);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rational>& values) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Rational coef = c;
        Monomial rest;
        for (const auto& [name, e] : m.exponents()) {
            auto it = values.find(name);
            if (it == values.end()) {
                rest = rest * Monomial::variable(name, e);
            } else {
                for (unsigned i = 0; i < e; ++i) coef *= it->second;
            }
        }
        r.add_term(rest, coef);
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            s += rational_str(a);
        } else {
            if (a != 1) s += rational_str(a) + "*";
            s += m.str();
        }
    }
    return s;
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
}

Scalar Scalar::zero(Backend b) {
    switch (b) {
        case Backend::rational: return Scalar(Rational(0));
        case Backend::real: return Scalar(0.0);
        case Backend::polynomial: return Scalar(Polynomial());
    }
    throw error("bad backend");
}

Scalar Scalar::one(Backend b) {
    switch (b) {
        case Backend::rational: return Scalar(Rational(1));
        case Backend::real: return Scalar(1.0);
        case Backend::polynomial: return Scalar(Polynomial(Rational(1)));
    }
    throw error("bad backend");
}

Backend Scalar::backend() const {
    if (std::holds_alternative<Rational>(v_)) return Backend::rational;
    if (std::holds_alternative<double>(v_)) return Backend::real;
    return Backend::polynomial;
}

namespace {
[[noreturn]] void mismatch(const Scalar& a, const Scalar& b, const char* op) {
    throw backend_error(std::string("backend mismatch in ") + op + ": " +
                        backend_name(a.backend()) + " vs " + backend_name(b.backend()));
}
} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (backend() != o.backend()) mismatch(*this, o, "+");
    switch (backend()) {
        case Backend::rational: return Scalar(as_rational() + o.as_rational());
        case Backend::real: return Scalar(as_real() + o.as_real());
        case Backend::polynomial: return Scalar(as_polynomial() + o.as_polynomial());
    }
    throw error("bad backend");
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (backend() != o.backend()) mismatch(*this, o, "-");
    switch (backend()) {
        case Backend::rational: return Scalar(as_rational() - o.as_rational());
        case Backend::real: return Scalar(as_real() - o.as_real());
        case Backend::polynomial: return Scalar(as_polynomial() - o.as_polynomial());
    }
    throw error("bad backend");
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (backend() != o.backend()) mismatch(*this, o, "*");
    switch (backend()) {
        case Backend::rational: return Scalar(as_rational() * o.as_rational());
        case Backend::real: return Scalar(as_real() * o.as_real());
        case Backend::polynomial: return Scalar(as_polynomial() * o.as_polynomial());
    }
    throw error("bad backend");
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (backend() != o.backend()) mismatch(*this, o, "/");
    switch (backend()) {
        case Backend::rational:
            if (o.as_rational() == 0) throw arithmetic_error("division by exact zero");
            return Scalar(as_rational() / o.as_rational());
        case Backend::real: return Scalar(as_real() / o.as_real());
        case Backend::polynomial:
            return Scalar(as_polynomial().divide_exact(o.as_polynomial()));
    }
    throw error("bad backend");
}

Scalar Scalar::operator-() const {
    switch (backend()) {
        case Backend::rational: return Scalar(Rational(-as_rational()));
        case Backend::real: return Scalar(-as_real());
        case Backend::polynomial: return Scalar(-as_polynomial());
    }
    throw error("bad backend");
}

bool Scalar::operator==(const Scalar& o) const {
    if (backend() == o.backend()) {
        switch (backend()) {
            case Backend::rational: return as_rational() == o.as_rational();
            case Backend::real: return as_real() == o.as_real();
            case Backend::polynomial: return as_polynomial() == o.as_polynomial();
        }
    }
    // Constant polynomials compare equal to the matching rational.
    if (backend() == Backend::polynomial && o.backend() == Backend::rational)
        return as_polynomial().is_constant() && as_polynomial().constant_value() == o.as_rational();
    if (backend() == Backend::rational && o.backend() == Backend::polynomial)
        return o == *this;
    return false;
}

bool Scalar::is_zero() const {
    switch (backend()) {
        case Backend::rational: return as_rational() == 0;
        case Backend::real: return as_real() == 0.0;
        case Backend::polynomial: return as_polynomial().is_zero();
    }
    throw error("bad backend");
}

int Scalar::sign() const {
    switch (backend()) {
        case Backend::rational: return sgn(as_rational());
        case Backend::real: return as_real() > 0 ? 1 : (as_real() < 0 ? -1 : 0);
        case Backend::polynomial: {
            Rational c = as_polynomial().constant_value(); // throws if non-constant
            return sgn(c);
        }
    }
    throw error("bad backend");
}

const Rational& Scalar::as_rational() const {
    if (auto* r = std::get_if<Rational>(&v_)) return *r;
    throw backend_error("scalar is not rational");
}

const Polynomial& Scalar::as_polynomial() const {
    if (auto* p = std::get_if<Polynomial>(&v_)) return *p;
    throw backend_error("scalar is not polynomial");
}

double Scalar::as_real() const {
    if (auto* x = std::get_if<double>(&v_)) return *x;
    throw backend_error("scalar is not float");
}

Scalar Scalar::to_real() const { return Scalar(to_double()); }

double Scalar::to_double() const {
    switch (backend()) {
        case Backend::rational: return as_rational().get_d();
        case Backend::real: return as_real();
        case Backend::polynomial: return Rational(as_polynomial().constant_value()).get_d();
    }
    throw error("bad backend");
}

std::string Scalar::str() const {
    switch (backend()) {
        case Backend::rational: return rational_str(as_rational());
        case Backend::real: return real_str(as_real());
        case Backend::polynomial: return as_polynomial().str();
    }
    throw error("bad backend");
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string real_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// ------------------------------------------------- rational independence

int Scalar::rational_independence_rank(const std::vector<Scalar>& values) {
    std::vector<Monomial> cols;
    {
        std::map<Monomial, size_t, MonomialGradedLexDesc> seen;
        for (const auto& v : values) {
            if (v.backend() != Backend::polynomial)
                throw backend_error("rational_independence_rank requires polynomial backend");
            for (const auto& [m, c] : v.as_polynomial().terms()) seen.emplace(m, 0);
        }
        seen.emplace(Monomial(), 0); // constant monomial column always present
        size_t i = 0;
        for (auto& [m, idx] : seen) {
            idx = i++;
            cols.push_back(m);
        }
    }
    std::map<Monomial, size_t, MonomialGradedLexDesc> col_index;
    for (size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

    std::vector<std::vector<Rational>> rows;
    for (const auto& v : values) {
        std::vector<Rational> row(cols.size(), Rational(0));
        for (const auto& [m, c] : v.as_polynomial().terms()) row[col_index.at(m)] = c;
        rows.push_back(std::move(row));
    }

    // Gaussian elimination over Q.
    int rank = 0;
    size_t ncols = cols.size();
    for (size_t col = 0; col < ncols && rank < (int)rows.size(); ++col) {
        size_t pivot = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if ((int)r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (size_t c2 = col; c2 < ncols; ++c2) rows[r][c2] -= f * rows[rank][c2];
        }
        ++rank;
    }
    return rank;
}

// ----------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

bool is_ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

std::string lex_ident(Lexer& lx) {
    std::string name;
    while (lx.i < lx.s.size() && is_ident_char(lx.s[lx.i])) name += lx.s[lx.i++];
    return name;
}

// Number literal. For exact backends: \d+(/\d+)?; for the real backend also
// decimal and scientific forms.
Scalar lex_number(Lexer& lx, Backend backend) {
    size_t start = lx.i;
    while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) ++lx.i;
    if (lx.i == start) throw parse_error("expected number at '" + lx.s.substr(start) + "'");

    bool is_float_form = false;
    if (lx.i < lx.s.size() && (lx.s[lx.i] == '.' || lx.s[lx.i] == 'e' || lx.s[lx.i] == 'E')) {
        is_float_form = true;
        if (lx.s[lx.i] == '.') {
            ++lx.i;
            while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) ++lx.i;
        }
        if (lx.i < lx.s.size() && (lx.s[lx.i] == 'e' || lx.s[lx.i] == 'E')) {
            ++lx.i;
            if (lx.i < lx.s.size() && (lx.s[lx.i] == '+' || lx.s[lx.i] == '-')) ++lx.i;
            while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) ++lx.i;
        }
    }
    std::string num = lx.s.substr(start, lx.i - start);

    if (is_float_form) {
        if (backend != Backend::real)
            throw parse_error("decimal literal '" + num + "' requires the float backend");
        return Scalar::real(std::stod(num));
    }

    std::string den;
    size_t save = lx.i;
    if (lx.peek() == '/') {
        ++lx.i;
        lx.skip_ws();
        size_t dstart = lx.i;
        while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) ++lx.i;
        den = lx.s.substr(dstart, lx.i - dstart);
        if (den.empty()) { // not a fraction after all
            lx.i = save;
        }
    }

    Rational r;
    if (den.empty())
        r = Rational(num);
    else
        r = Rational(num + "/" + den);
    r.canonicalize();
    if (backend == Backend::real) return Scalar::real(r.get_d());
    if (backend == Backend::polynomial) return Scalar::polynomial(Polynomial(r));
    return Scalar::rational(r);
}

Scalar parse_factor(Lexer& lx, Backend backend, const std::set<std::string>& symbols) {
    char c = lx.peek();
    if (std::isdigit((unsigned char)c)) return lex_number(lx, backend);
    if (is_ident_start(c)) {
        std::string name = lex_ident(lx);
        if (backend != Backend::polynomial)
            throw parse_error("symbol '" + name + "' requires the polynomial backend");
        if (!symbols.empty() && !symbols.count(name))
            throw parse_error("undeclared symbol '" + name + "'");
        return Scalar::variable(name);
    }
    throw parse_error(std::string("unexpected character '") + c + "' in scalar literal");
}

Scalar parse_term(Lexer& lx, Backend backend, const std::set<std::string>& symbols) {
    Scalar v = parse_factor(lx, backend, symbols);
    while (lx.peek() == '*') {
        ++lx.i;
        v = v * parse_factor(lx, backend, symbols);
    }
    return v;
}

} // namespace

Scalar Scalar::parse(const std::string& text, Backend backend,
                     const std::vector<std::string>& symbols) {
    std::set<std::string> syms(symbols.begin(), symbols.end());
    Lexer lx{text};
    bool neg = false;
    if (lx.peek() == '-') {
        neg = true;
        ++lx.i;
    } else if (lx.peek() == '+') {
        ++lx.i;
    }
    Scalar v = parse_term(lx, backend, syms);
    if (neg) v = -v;
    while (!lx.done()) {
        char c = lx.peek();
        if (c != '+' && c != '-')
            throw parse_error("trailing input in scalar literal: '" + lx.s.substr(lx.i) + "'");
        ++lx.i;
        Scalar t = parse_term(lx, backend, syms);
        v = (c == '+') ? v + t : v - t;
    }
    return v;
}

} // namespace nct
