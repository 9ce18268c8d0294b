#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qmpl/rational.hpp"
#include "qmpl/symbol.hpp"

namespace qmpl {

/// A power product of symbols with positive exponents, kept sorted by symbol.
/// The empty monomial is 1.
class Monomial {
  public:
    using Entry = std::pair<Symbol, unsigned>;

    Monomial() = default;
    static Monomial one() { return {}; }
    static Monomial var(Symbol s, unsigned e = 1);

    bool is_one() const { return entries_.empty(); }
    unsigned degree(Symbol s) const;
    unsigned total_degree() const;
    const std::vector<Entry>& entries() const { return entries_; }

    Monomial operator*(const Monomial& o) const;
    Monomial pow(unsigned e) const;

    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.entries_ <=> b.entries_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }

    std::string str() const;

  private:
    std::vector<Entry> entries_;
};

/// Sparse multivariate polynomial over Rational. Canonical: no zero
/// coefficients are stored; the zero polynomial is the empty term map.
/// Term maps iterate in a fixed monomial order, so printing and equality
/// are deterministic.
class SparsePoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    SparsePoly() = default;
    SparsePoly(const Rational& c);
    SparsePoly(int c) : SparsePoly(Rational(c)) {}

    static SparsePoly zero() { return {}; }
    static SparsePoly one() { return SparsePoly(Rational(1)); }
    static SparsePoly var(Symbol s, unsigned e = 1);
    static SparsePoly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Max exponent of s across terms (0 if absent).
    unsigned degree(Symbol s) const;
    std::set<Symbol> symbols() const;
    /// Constant term (the coefficient of the empty monomial).
    Rational constant_term() const;

    void add_term(const Monomial& m, const Rational& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly& operator*=(const Rational& c);
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

    SparsePoly pow(unsigned e) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
    /// Arbitrary but deterministic total order (used for factor interning).
    friend bool operator<(const SparsePoly& a, const SparsePoly& b);

    /// Exact value at a full assignment; throws MissingSymbolError if any
    /// symbol of the polynomial is unassigned.
    Rational eval(const std::map<Symbol, Rational>& assignment) const;
    /// Substitutes the given symbols, keeps the others.
    SparsePoly subst(const std::map<Symbol, Rational>& assignment) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const SparsePoly& p);

  private:
    TermMap terms_;
};

inline SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) { return a * b; }
inline Rational poly_eval(const SparsePoly& p, const std::map<Symbol, Rational>& a) { return p.eval(a); }

}  // namespace qmpl
