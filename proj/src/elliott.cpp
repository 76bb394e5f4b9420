#include "nct/elliott.hpp"

#include <algorithm>
#include <numeric>

namespace nct {

namespace {

// Enumerate perfect matchings of positions {0..2m-1}, always pairing the
// smallest unmatched position first. `word` collects the flattened matching
// (a1 b1 a2 b2 ...) as positions; the permutation sign of that word is the
// sign of the term.
void enumerate_matchings(std::vector<int>& avail, std::vector<int>& word,
                         const std::vector<int>& subset0, const SkewMatrix& theta, Scalar& acc) {
    if (avail.empty()) {
        // parity of the word as a permutation of 0..2m-1 (inversion count)
        int inv = 0;
        for (size_t i = 0; i < word.size(); ++i)
            for (size_t j = i + 1; j < word.size(); ++j)
                if (word[i] > word[j]) ++inv;
        Scalar term = Scalar::one(theta.backend());
        for (size_t s = 0; s + 1 < word.size(); s += 2)
            term *= theta.at(subset0[word[s]], subset0[word[s + 1]]);
        acc = (inv % 2 == 0) ? acc + term : acc - term;
        return;
    }
    int a = avail.front();
    for (size_t k = 1; k < avail.size(); ++k) {
        int b = avail[k];
        std::vector<int> rest;
        rest.reserve(avail.size() - 2);
        for (size_t u = 1; u < avail.size(); ++u)
            if (u != k) rest.push_back(avail[u]);
        word.push_back(a);
        word.push_back(b);
        enumerate_matchings(rest, word, subset0, theta, acc);
        word.pop_back();
        word.pop_back();
    }
}

} // namespace

long matching_count(int two_m) {
    long c = 1;
    for (int k = two_m - 1; k > 1; k -= 2) c *= k;
    return c;
}

Scalar elliott_generator(const SkewMatrix& theta, const std::vector<int>& subset) {
    if (subset.size() % 2 == 1) throw dimension_error("generator subset must have even size");
    std::vector<int> subset0;
    for (size_t k = 0; k < subset.size(); ++k) {
        int i = subset[k];
        if (i < 1 || i > theta.n()) throw dimension_error("generator subset index out of range");
        if (k > 0 && i <= subset[k - 1])
            throw dimension_error("generator subset must be strictly increasing");
        subset0.push_back(i - 1);
    }
    if (subset.empty()) return Scalar::one(theta.backend());
    Scalar acc = Scalar::zero(theta.backend());
    std::vector<int> avail(subset.size());
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> word;
    enumerate_matchings(avail, word, subset0, theta, acc);
    return acc;
}

TraceLattice trace_lattice(const SkewMatrix& theta) {
    TraceLattice L;
    L.n = theta.n();
    L.backend = theta.backend();
    for (const auto& s : even_subsets(theta.n()))
        L.generators.emplace_back(s, elliott_generator(theta, s));
    return L;
}

LatticeReduction rational_lattice_reduce(const TraceLattice& lattice) {
    mpz_class g(0), d(1);
    for (const auto& [s, v] : lattice.generators) {
        if (v.backend() != Backend::rational)
            throw backend_error("lattice reduction requires rational generators");
        const Rational& r = v.as_rational();
        if (r == 0) continue;
        // maintain the subgroup generated so far as (g/d) Z
        mpz_class num = abs(r.get_num()), den = r.get_den();
        mpz_class nd = d * den / gcd(d, den); // lcm of denominators
        mpz_class a = g * (nd / d), b = num * (nd / den);
        g = a == 0 ? b : gcd(a, b);
        d = nd;
    }
    LatticeReduction out;
    out.generator = Rational(g, d);
    out.generator.canonicalize();
    return out;
}

BasisCertificate basis_certificate(const SkewMatrix& theta) {
    if (theta.backend() != Backend::polynomial)
        throw backend_error("basis certificate requires the symbolic (polynomial) backend");
    BasisCertificate cert;
    cert.expected_rank = 1 << (theta.n() - 1);

    auto lattice = trace_lattice(theta);

    // Each matching-sum generator must equal the pfaffian minor on the nose.
    for (const auto& [s, v] : lattice.generators) {
        if (!(v == pfaffian_minor(theta, s))) {
            cert.pass = false;
            cert.witness = s;
            cert.detail = "matching sum disagrees with pfaffian minor";
            return cert;
        }
    }

    // Incremental rank: find the first generator dependent on its predecessors.
    std::vector<Scalar> prefix;
    int rank = 0;
    for (const auto& [s, v] : lattice.generators) {
        prefix.push_back(v);
        int r = Scalar::rational_independence_rank(prefix);
        if (r == rank) {
            if (!cert.witness) cert.witness = s;
        } else {
            rank = r;
        }
    }
    cert.rank = rank;
    cert.pass = rank == cert.expected_rank;
    if (cert.pass) {
        cert.witness.reset();
        cert.detail = "all generators Q-linearly independent";
    } else if (cert.detail.empty()) {
        cert.detail = "generators are Q-linearly dependent";
    }
    return cert;
}

} // namespace nct
