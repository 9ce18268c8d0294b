#pragma once

#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>

#include "qmpl/frac.hpp"

namespace qmpl {

/// Element of the quantum plane R_q[x,y] (relation yx = qxy) in normal form:
/// a finite map (j,k) -> coefficient representing sum c_{jk} x^j y^k with all
/// x powers left of all y powers. Coefficients are central fractions in the
/// remaining symbols; no stored coefficient is zero.
class NCPoly {
  public:
    using Key = std::pair<unsigned, unsigned>;  // (x exponent, y exponent)
    using TermMap = std::map<Key, Frac>;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly one() { return monomial(0, 0, Frac::one()); }
    static NCPoly x() { return monomial(1, 0, Frac::one()); }
    static NCPoly y() { return monomial(0, 1, Frac::one()); }
    static NCPoly monomial(unsigned j, unsigned k, Frac coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    /// Coefficient at (j,k); zero if absent.
    const Frac& coeff(unsigned j, unsigned k) const;

    void add_term(unsigned j, unsigned k, const Frac& c);

    /// Normal-form product: (x^{j1} y^{k1})(x^{j2} y^{k2}) =
    /// q^{k1 j2} x^{j1+j2} y^{k1+k2}, extended bilinearly.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator+(NCPoly a, const NCPoly& b);
    friend NCPoly operator-(NCPoly a, const NCPoly& b);
    NCPoly operator-() const;

    NCPoly scaled(const Frac& c) const;
    NCPoly pow(unsigned n) const;

    /// Termwise coefficient equality on matching keys.
    friend bool operator==(const NCPoly& a, const NCPoly& b);
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Coefficientwise q := 1; the result is the commutative image written
    /// as a fraction whose numerator carries x and y as ordinary symbols.
    Frac limit_q1() const;

    std::string str() const;

  private:
    TermMap terms_;
};

inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b) { return a * b; }
inline NCPoly nc_add(const NCPoly& a, const NCPoly& b) { return a + b; }
inline NCPoly nc_pow(const NCPoly& a, unsigned n) { return a.pow(n); }
inline Frac nc_limit_q1(const NCPoly& a) { return a.limit_q1(); }

/// Left-to-right product X1 X2 ... Xv; the empty sequence gives 1.
NCPoly nc_ordered_product(std::span<const NCPoly> factors);

/// First key (in lexicographic key order) where the two normal forms have
/// different coefficients, with both coefficients; nullopt if equal.
std::optional<std::tuple<NCPoly::Key, Frac, Frac>> nc_first_difference(const NCPoly& a,
                                                                       const NCPoly& b);

/// Embeds a commutative polynomial in x (coefficients in the remaining
/// symbols) as the normal form (sum_j c_j x^j) y^k.
NCPoly embed_x_poly(const SparsePoly& p, unsigned ypow);

}  // namespace qmpl
