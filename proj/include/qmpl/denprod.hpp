#pragma once

#include <map>
#include <vector>

#include "qmpl/frac.hpp"

namespace qmpl {

/// A denominator kept in factored form: a product of interned nonzero
/// polynomial factors with positive exponents. Keeping the factorization
/// lets long sums of fractions run over a shared common denominator
/// instead of the degree-doubling pairwise rule.
class DenProduct {
  public:
    DenProduct() = default;

    static DenProduct of(const SparsePoly& factor, int exp = 1);

    DenProduct& mul(const SparsePoly& factor, int exp = 1);
    DenProduct& mul(const DenProduct& o);

    bool is_one() const { return factors_.empty(); }

    /// Factorwise max of exponents.
    DenProduct lcm(const DenProduct& o) const;
    /// Factorwise difference; requires o to divide *this.
    DenProduct quotient(const DenProduct& o) const;
    bool divides(const DenProduct& o) const;  // *this divides o

    /// Expanded product (memoized per thread).
    const SparsePoly& expand() const;

    friend bool operator==(const DenProduct& a, const DenProduct& b) {
        return a.factors_ == b.factors_;
    }

  private:
    // factor id -> exponent; ids index a per-thread intern table
    std::map<int, int> factors_;
};

/// Running sum of fractions num/den with factored denominators. The sum is
/// held over the factorwise least common denominator, so adding a term costs
/// one small cofactor multiplication instead of a full cross-multiplication.
class FracSum {
  public:
    FracSum() = default;

    void add(const SparsePoly& num, const DenProduct& den);
    void add(const SparsePoly& num) { add(num, DenProduct()); }

    bool is_zero() const { return num_.is_zero(); }
    const SparsePoly& num() const { return num_; }
    const DenProduct& den() const { return den_; }

    Frac value() const { return Frac(num_, den_.expand()); }

  private:
    SparsePoly num_;
    DenProduct den_;
};

/// Cross-multiplication equality using factored cofactors: both sides are
/// brought to the factorwise LCM, which keeps the multiplications small when
/// the denominators largely coincide.
bool fracsum_eq(const FracSum& a, const FracSum& b);

}  // namespace qmpl
