#include <doctest.h>

#include "qmpl/denprod.hpp"
#include "qmpl/frac.hpp"
#include "test_util.hpp"

using namespace qmpl;
namespace tu = qmpl::testutil;

namespace {
const Symbol Q = Symbol::Q();
const Symbol T1 = Symbol::T(1);

SparsePoly qpow(unsigned e) { return SparsePoly::var(Q, e); }
}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).denominator() == 2);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::parse("-5/15") == Rational(-1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
    CHECK(Rational(-3, 7).str() == "-3/7");
}

TEST_CASE("symbol order is q < t1 < t2 < ... < x < y < a") {
    CHECK(Symbol::Q() < Symbol::T(1));
    CHECK(Symbol::T(1) < Symbol::T(2));
    CHECK(Symbol::T(99) < Symbol::X());
    CHECK(Symbol::X() < Symbol::Y());
    CHECK(Symbol::Y() < Symbol::A());
    CHECK(Symbol::T(3).name() == "t3");
}

TEST_CASE("poly_mul examples") {
    const SparsePoly one = SparsePoly::one();
    // (1+q)(1-q) = 1-q^2
    CHECK((one + qpow(1)) * (one - qpow(1)) == one - qpow(2));
    // 0 * p = 0
    tu::Rng rng(7);
    CHECK((SparsePoly::zero() * tu::rand_poly(rng)).is_zero());
    // (1+q+q^2)(1+q^2) = 1+q+2q^2+q^3+q^4
    SparsePoly lhs = (one + qpow(1) + qpow(2)) * (one + qpow(2));
    SparsePoly expect = one + qpow(1) + Rational(2) * qpow(2) + qpow(3) + qpow(4);
    CHECK(lhs == expect);
}

TEST_CASE("poly_eval examples and missing symbol") {
    const SparsePoly p = SparsePoly::one() + qpow(1) + qpow(2);
    CHECK(p.eval({{Q, Rational(1)}}) == Rational(3));
    CHECK(p.eval({{Q, Rational(2)}}) == Rational(7));
    const SparsePoly tq = SparsePoly::var(T1) * qpow(1);
    CHECK(tq.eval({{Q, Rational(1, 2)}, {T1, Rational(4)}}) == Rational(2));
    CHECK_THROWS_AS(tq.eval({{Q, Rational(1)}}), MissingSymbolError);
}

TEST_CASE("poly ring laws on random inputs") {
    tu::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const SparsePoly a = tu::rand_poly(rng);
        const SparsePoly b = tu::rand_poly(rng);
        const SparsePoly c = tu::rand_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    tu::Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        const SparsePoly a = tu::rand_poly(rng);
        const SparsePoly b = tu::rand_poly(rng);
        std::map<Symbol, Rational> sigma;
        for (Symbol s : (a * b + a + b).symbols()) sigma[s] = tu::rand_rational(rng);
        CHECK((a * b).eval(sigma) == a.eval(sigma) * b.eval(sigma));
        CHECK((a + b).eval(sigma) == a.eval(sigma) + b.eval(sigma));
    }
}

TEST_CASE("zero coefficients are never stored") {
    tu::Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        const SparsePoly a = tu::rand_poly(rng);
        const SparsePoly b = tu::rand_poly(rng);
        const SparsePoly comm = a * b - b * a;
        const SparsePoly sum = a + b;
        CHECK(comm.is_zero());
        for (const auto& [m, c] : sum.terms()) CHECK(!c.is_zero());
    }
}

TEST_CASE("term budget guards multiplication") {
    const std::size_t saved = term_budget();
    set_term_budget(8);
    SparsePoly big;
    for (unsigned i = 0; i < 8; ++i) big.add_term(Monomial::var(Q, i), Rational(1));
    CHECK_THROWS_AS(big * big, ResourceLimitError);
    set_term_budget(saved);
    CHECK_NOTHROW(big * big);
}

TEST_CASE("frac_arith examples") {
    const Frac one_minus_q(SparsePoly::one() - qpow(1));
    const Frac a = Frac(SparsePoly::one(), SparsePoly::one() - qpow(1));
    const Frac b = Frac(qpow(1), SparsePoly::one() - qpow(1));
    CHECK(a - b == Frac::one());

    const Frac t1 = Frac::var(T1);
    CHECK(t1 / t1 == Frac::one());
    CHECK_THROWS_AS(t1 / Frac::zero(), DivisionByZeroError);

    const Frac half_q = Frac(SparsePoly::one(), SparsePoly::one() + qpow(1));  // 1/[2]
    const Frac sum = half_q + half_q;
    CHECK(sum == Frac(SparsePoly(Rational(2)), SparsePoly::one() + qpow(1)));
}

TEST_CASE("frac_eq examples") {
    // (1-q^2)/(1-q) = (1+q)/1
    CHECK(Frac(SparsePoly::one() - qpow(2), SparsePoly::one() - qpow(1)) ==
          Frac(SparsePoly::one() + qpow(1)));
    // zero over anything equals zero over anything
    tu::Rng rng(45);
    CHECK(Frac(SparsePoly::zero(), tu::rand_nonzero_poly(rng)) ==
          Frac(SparsePoly::zero(), tu::rand_nonzero_poly(rng)));
    // 1/[2] = 1/(1+q)
    CHECK(Frac(SparsePoly::one(), SparsePoly::one() + qpow(1)) ==
          Frac(SparsePoly::one(), SparsePoly::one() + qpow(1)));
}

TEST_CASE("frac_eq is an equivalence relation") {
    tu::Rng rng(46);
    for (int i = 0; i < 200; ++i) {
        const Frac a = tu::rand_frac(rng);
        CHECK(a == a);
        // scaled representative of the same element
        const SparsePoly s = tu::rand_nonzero_poly(rng);
        const Frac b = Frac(a.num() * s, a.den() * s);
        const SparsePoly s2 = tu::rand_nonzero_poly(rng);
        const Frac c = Frac(b.num() * s2, b.den() * s2);
        CHECK(a == b);
        CHECK(b == a);
        CHECK(b == c);
        CHECK(a == c);  // transitivity across representatives
    }
}

TEST_CASE("frac field laws on random inputs") {
    tu::Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const Frac a = tu::rand_frac(rng);
        const Frac b = tu::rand_frac(rng);
        const Frac c = tu::rand_frac(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("frac_limit_q1 examples") {
    const Frac inv3(SparsePoly::one(), SparsePoly::one() + qpow(1) + qpow(2));  // 1/[3]
    CHECK(frac_limit_q1(inv3) == Frac(SparsePoly(Rational(1, 3))));

    const Frac t_over2(SparsePoly::var(T1), SparsePoly::one() + qpow(1));
    CHECK(frac_limit_q1(t_over2) == Frac(SparsePoly::var(T1) * Rational(1, 2)));

    const Frac indeterminate(SparsePoly::one() - qpow(1), SparsePoly::one() - qpow(1));
    CHECK_THROWS_AS(frac_limit_q1(indeterminate), IndeterminateLimitError);

    // extra substitutions ride along with q := 1
    std::map<Symbol, Rational> other{{T1, Rational(6)}};
    CHECK(frac_limit_q1(t_over2, other) == Frac(SparsePoly(Rational(3))));
    const Frac t_den(SparsePoly::one(), SparsePoly::var(T1) - SparsePoly(Rational(6)));
    CHECK_THROWS_AS(frac_limit_q1(t_den, other), IndeterminateLimitError);
}

TEST_CASE("limit commutes with arithmetic when denominators are q-integer products") {
    // denominators built from q-integers never vanish at q = 1
    tu::Rng rng(48);
    auto rand_qint_den = [&](tu::Rng& r) {
        SparsePoly d = SparsePoly::one();
        for (int i = 0; i < 2; ++i) {
            SparsePoly qi;
            const long n = 1 + tu::rand_below(r, 4);
            for (long e = 0; e < n; ++e) qi += qpow(static_cast<unsigned>(e));
            d = d * qi;
        }
        return d;
    };
    for (int i = 0; i < 100; ++i) {
        const Frac a(tu::rand_poly(rng), rand_qint_den(rng));
        const Frac b(tu::rand_poly(rng), rand_qint_den(rng));
        CHECK(frac_limit_q1(a + b) == frac_limit_q1(a) + frac_limit_q1(b));
        CHECK(frac_limit_q1(a * b) == frac_limit_q1(a) * frac_limit_q1(b));
        CHECK(frac_limit_q1(a - b) == frac_limit_q1(a) - frac_limit_q1(b));
        // division only when the divisor numerator survives at q = 1
        if (!b.is_zero() && !b.num().subst({{Symbol::Q(), Rational(1)}}).is_zero())
            CHECK(frac_limit_q1(a / b) == frac_limit_q1(a) / frac_limit_q1(b));
    }
}

TEST_CASE("factored fraction sums agree with plain fraction arithmetic") {
    tu::Rng rng(49);
    for (int i = 0; i < 100; ++i) {
        const SparsePoly n1 = tu::rand_poly(rng), n2 = tu::rand_poly(rng);
        const SparsePoly f1 = tu::rand_nonzero_poly(rng), f2 = tu::rand_nonzero_poly(rng);
        FracSum sum;
        sum.add(n1, DenProduct::of(f1).mul(f2));
        sum.add(n2, DenProduct::of(f2, 2));
        const Frac direct = Frac(n1, f1 * f2) + Frac(n2, f2 * f2);
        CHECK(sum.value() == direct);
    }
}
