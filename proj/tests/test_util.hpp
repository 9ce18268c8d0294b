#pragma once

// Shared test helpers: seeded random generators for the algebra types and
// small independent oracles (dense q-division, word rewriting) used to
// cross-check the library's construction paths.

#include <random>
#include <vector>

#include "qmpl/frac.hpp"
#include "qmpl/ncpoly.hpp"
#include "qmpl/poly.hpp"

namespace qmpl::testutil {

using Rng = std::mt19937_64;

inline long rand_below(Rng& rng, long n) { return static_cast<long>(rng() % static_cast<unsigned long>(n)); }

inline Rational rand_rational(Rng& rng, long num_range = 20, long den_range = 9) {
    const long num = rand_below(rng, 2 * num_range + 1) - num_range;
    const long den = 1 + rand_below(rng, den_range);
    return Rational(num, den);
}

inline Rational rand_nonzero_rational(Rng& rng) {
    for (;;) {
        Rational r = rand_rational(rng);
        if (!r.is_zero()) return r;
    }
}

inline Symbol rand_symbol(Rng& rng) {
    switch (rand_below(rng, 5)) {
        case 0: return Symbol::Q();
        case 1: return Symbol::T(1);
        case 2: return Symbol::T(2);
        case 3: return Symbol::X();
        default: return Symbol::A();
    }
}

inline SparsePoly rand_poly(Rng& rng, int max_terms = 5, unsigned max_exp = 4) {
    SparsePoly p;
    const long terms = rand_below(rng, max_terms + 1);
    for (long i = 0; i < terms; ++i) {
        Monomial m = Monomial::var(rand_symbol(rng), static_cast<unsigned>(rand_below(rng, max_exp + 1)));
        if (rand_below(rng, 2)) m = m * Monomial::var(rand_symbol(rng), static_cast<unsigned>(rand_below(rng, max_exp + 1)));
        p.add_term(m, rand_rational(rng));
    }
    return p;
}

inline SparsePoly rand_nonzero_poly(Rng& rng, int max_terms = 4, unsigned max_exp = 3) {
    for (;;) {
        SparsePoly p = rand_poly(rng, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline Frac rand_frac(Rng& rng) { return Frac(rand_poly(rng), rand_nonzero_poly(rng)); }

inline NCPoly rand_ncpoly(Rng& rng, unsigned max_deg = 3) {
    NCPoly p;
    const long terms = rand_below(rng, 4);
    for (long i = 0; i < terms; ++i) {
        const unsigned j = static_cast<unsigned>(rand_below(rng, max_deg + 1));
        const unsigned k = static_cast<unsigned>(rand_below(rng, max_deg + 1));
        SparsePoly num = rand_poly(rng, 3, 2);
        p.add_term(j, k, Frac(num));
    }
    return p;
}

// ---- dense division oracle for q-only polynomials --------------------------

inline std::vector<Rational> to_dense_q(const SparsePoly& p) {
    std::vector<Rational> c(p.degree(Symbol::Q()) + 1, Rational(0));
    for (const auto& [m, coeff] : p.terms()) {
        for (const auto& [sym, e] : m.entries())
            if (sym != Symbol::Q()) throw Error("dense oracle: polynomial is not q-only");
        c[m.degree(Symbol::Q())] = coeff;
    }
    return c;
}

inline SparsePoly from_dense_q(const std::vector<Rational>& c) {
    SparsePoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        p.add_term(Monomial::var(Symbol::Q(), static_cast<unsigned>(i)), c[i]);
    return p;
}

/// Exact univariate division in q; throws InexactDivisionError on remainder.
inline SparsePoly q_divexact(const SparsePoly& a, const SparsePoly& b) {
    std::vector<Rational> num = to_dense_q(a);
    const std::vector<Rational> den = to_dense_q(b);
    if (den.empty() || den.back().is_zero()) throw Error("division by zero polynomial");
    if (num.size() < den.size()) {
        for (const Rational& c : num)
            if (!c.is_zero()) throw InexactDivisionError("degree too small");
        return SparsePoly::zero();
    }
    std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational q = num[i + den.size() - 1] / den.back();
        quot[i] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
    }
    for (const Rational& c : num)
        if (!c.is_zero()) throw InexactDivisionError("nonzero remainder");
    return from_dense_q(quot);
}

// ---- word-rewriting oracle for the quantum plane ---------------------------

// A noncommutative polynomial as a list of (coefficient, word) pairs with
// words over {x, y}. Multiplication concatenates; normal ordering bubbles
// every x left across y, one adjacent swap (yx -> q xy) at a time.
struct WordPoly {
    std::vector<std::pair<Frac, std::vector<char>>> terms;

    static WordPoly x() { return {{{Frac::one(), {'x'}}}}; }
    static WordPoly y() { return {{{Frac::one(), {'y'}}}}; }
    static WordPoly one() { return {{{Frac::one(), {}}}}; }

    WordPoly operator+(const WordPoly& o) const {
        WordPoly r = *this;
        r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
        return r;
    }
    WordPoly operator*(const WordPoly& o) const {
        WordPoly r;
        for (const auto& [ca, wa] : terms) {
            for (const auto& [cb, wb] : o.terms) {
                std::vector<char> w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.terms.push_back({ca * cb, std::move(w)});
            }
        }
        return r;
    }
    WordPoly pow(unsigned n) const {
        WordPoly acc = one();
        for (unsigned i = 0; i < n; ++i) acc = acc * *this;
        return acc;
    }

    /// Collects into the (j,k) normal form by explicit adjacent rewriting.
    NCPoly normal_form() const {
        NCPoly out;
        for (const auto& [c, word] : terms) {
            std::vector<char> w = word;
            unsigned swaps = 0;
            bool again = true;
            while (again) {
                again = false;
                for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                    if (w[i] == 'y' && w[i + 1] == 'x') {
                        std::swap(w[i], w[i + 1]);
                        ++swaps;
                        again = true;
                    }
                }
            }
            unsigned j = 0, k = 0;
            for (char ch : w) (ch == 'x' ? j : k)++;
            Frac coeff = c * Frac(SparsePoly::var(Symbol::Q(), swaps));
            out.add_term(j, k, coeff);
        }
        return out;
    }
};

}  // namespace qmpl::testutil
