#include "qmpl/frac.hpp"

namespace qmpl {

Frac::Frac(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("fraction with zero denominator");
}

Frac operator+(const Frac& a, const Frac& b) {
    // common denominator is kept when the two are structurally equal
    if (a.den_ == b.den_) return Frac::raw(a.num_ + b.num_, a.den_);
    return Frac::raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator-(const Frac& a, const Frac& b) {
    if (a.den_ == b.den_) return Frac::raw(a.num_ - b.num_, a.den_);
    return Frac::raw(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator*(const Frac& a, const Frac& b) {
    return Frac::raw(a.num_ * b.num_, a.den_ * b.den_);
}

Frac operator/(const Frac& a, const Frac& b) {
    if (b.num_.is_zero()) throw DivisionByZeroError("division by zero fraction");
    return Frac::raw(a.num_ * b.den_, a.den_ * b.num_);
}

Frac Frac::pow(unsigned e) const {
    Frac acc = Frac::one();
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

bool operator==(const Frac& a, const Frac& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational Frac::eval(const std::map<Symbol, Rational>& assignment) const {
    const Rational d = den_.eval(assignment);
    if (d.is_zero()) throw DivisionByZeroError("fraction denominator vanishes at point");
    return num_.eval(assignment) / d;
}

Frac Frac::subst(const std::map<Symbol, Rational>& assignment) const {
    SparsePoly d = den_.subst(assignment);
    if (d.is_zero()) throw DivisionByZeroError("fraction denominator vanishes under substitution");
    return Frac(num_.subst(assignment), std::move(d));
}

std::string Frac::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Frac frac_limit_q1(const Frac& f, const std::optional<std::map<Symbol, Rational>>& other) {
    std::map<Symbol, Rational> assignment;
    if (other) assignment = *other;
    assignment[Symbol::Q()] = Rational(1);
    SparsePoly den = f.den().subst(assignment);
    if (den.is_zero())
        throw IndeterminateLimitError("denominator vanishes identically at q = 1");
    return Frac(f.num().subst(assignment), std::move(den));
}

}  // namespace qmpl
