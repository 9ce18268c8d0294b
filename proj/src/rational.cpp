#include "qmpl/rational.hpp"

#include <atomic>
#include <ostream>

namespace qmpl {

namespace {
std::atomic<std::size_t> g_term_budget{1'000'000};
}

std::size_t term_budget() { return g_term_budget.load(std::memory_order_relaxed); }

void set_term_budget(std::size_t budget) {
    g_term_budget.store(budget, std::memory_order_relaxed);
}

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class n(std::string(text), 10);
            return Rational(n, mpz_class(1));
        }
        mpz_class n(std::string(text.substr(0, slash)), 10);
        mpz_class d(std::string(text.substr(slash + 1)), 10);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse rational: '" + std::string(text) + "'");
    }
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base(*this), acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational Rational::abs() const {
    Rational r(*this);
    r.v_ = ::abs(r.v_);
    return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace qmpl
