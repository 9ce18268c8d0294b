#pragma once

#include <map>
#include <optional>
#include <string>

#include "qmpl/poly.hpp"

namespace qmpl {

/// Unreduced fraction of two polynomials (denominator nonzero). No gcd
/// reduction is ever performed; equality is cross-multiplication:
/// a/b = c/d iff a*d = c*b as polynomials.
class Frac {
  public:
    Frac() : num_(SparsePoly::zero()), den_(SparsePoly::one()) {}
    Frac(SparsePoly num) : num_(std::move(num)), den_(SparsePoly::one()) {}
    Frac(SparsePoly num, SparsePoly den);
    Frac(const Rational& c) : Frac(SparsePoly(c)) {}
    Frac(int c) : Frac(SparsePoly(c)) {}

    static Frac zero() { return Frac(); }
    static Frac one() { return Frac(SparsePoly::one()); }
    static Frac var(Symbol s) { return Frac(SparsePoly::var(s)); }

    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True iff denominator is the constant 1.
    bool has_unit_den() const { return den_.is_one(); }

    Frac operator-() const { return Frac::raw(-num_, den_); }
    friend Frac operator+(const Frac& a, const Frac& b);
    friend Frac operator-(const Frac& a, const Frac& b);
    friend Frac operator*(const Frac& a, const Frac& b);
    friend Frac operator/(const Frac& a, const Frac& b);
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }

    Frac pow(unsigned e) const;

    /// Cross-multiplication equality.
    friend bool operator==(const Frac& a, const Frac& b);
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    Rational eval(const std::map<Symbol, Rational>& assignment) const;
    Frac subst(const std::map<Symbol, Rational>& assignment) const;

    std::string str() const;

  private:
    static Frac raw(SparsePoly n, SparsePoly d) {
        Frac f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }
    SparsePoly num_, den_;
};

inline bool frac_eq(const Frac& a, const Frac& b) { return a == b; }

/// Substitutes q := 1 (plus any extra assignments) in numerator and
/// denominator. Throws IndeterminateLimitError if the substituted
/// denominator is the zero polynomial; no factor cancellation is attempted.
Frac frac_limit_q1(const Frac& f,
                   const std::optional<std::map<Symbol, Rational>>& other = std::nullopt);

}  // namespace qmpl
