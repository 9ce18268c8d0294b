#include "qmpl/ncpoly.hpp"

#include "qmpl/qcore.hpp"

namespace qmpl {

NCPoly NCPoly::monomial(unsigned j, unsigned k, Frac coeff) {
    NCPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(Key{j, k}, std::move(coeff));
    return p;
}

const Frac& NCPoly::coeff(unsigned j, unsigned k) const {
    static const Frac kZero;
    auto it = terms_.find({j, k});
    return it == terms_.end() ? kZero : it->second;
}

void NCPoly::add_term(unsigned j, unsigned k, const Frac& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{j, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.size() > term_budget()) throw ResourceLimitError("normal form exceeds term budget");
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // yx = qxy: moving y^{k1} across x^{j2} collects q^{k1 j2}
            const unsigned twist = ka.second * kb.first;
            Frac c = ca * cb;
            if (twist > 0) c *= Frac(q_power(twist));
            r.add_term(ka.first + kb.first, ka.second + kb.second, c);
        }
    }
    return r;
}

NCPoly operator+(NCPoly a, const NCPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
    return a;
}

NCPoly operator-(NCPoly a, const NCPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, -c);
    return a;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

NCPoly NCPoly::scaled(const Frac& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) {
        Frac scaled = v * c;
        if (!scaled.is_zero()) r.terms_.emplace(k, std::move(scaled));
    }
    return r;
}

NCPoly NCPoly::pow(unsigned n) const {
    NCPoly acc = NCPoly::one();
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

bool operator==(const NCPoly& a, const NCPoly& b) { return !nc_first_difference(a, b); }

Frac NCPoly::limit_q1() const {
    Frac total;
    for (const auto& [k, c] : terms_) {
        Frac image = frac_limit_q1(c);
        const Monomial xy = Monomial::var(Symbol::X(), k.first) * Monomial::var(Symbol::Y(), k.second);
        total += Frac(image.num() * SparsePoly::term(Rational(1), xy), image.den());
    }
    return total;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "[" + c.str() + "]";
        if (k.first > 0) {
            s += "*x";
            if (k.first > 1) s += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            s += "*y";
            if (k.second > 1) s += "^" + std::to_string(k.second);
        }
    }
    return s;
}

NCPoly nc_ordered_product(std::span<const NCPoly> factors) {
    NCPoly acc = NCPoly::one();
    for (const NCPoly& f : factors) acc = acc * f;
    return acc;
}

std::optional<std::tuple<NCPoly::Key, Frac, Frac>> nc_first_difference(const NCPoly& a,
                                                                       const NCPoly& b) {
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    while (i != a.terms().end() || j != b.terms().end()) {
        if (j == b.terms().end() || (i != a.terms().end() && i->first < j->first)) {
            if (!i->second.is_zero()) return {{i->first, i->second, Frac::zero()}};
            ++i;
        } else if (i == a.terms().end() || j->first < i->first) {
            if (!j->second.is_zero()) return {{j->first, Frac::zero(), j->second}};
            ++j;
        } else {
            if (!(i->second == j->second)) return {{i->first, i->second, j->second}};
            ++i, ++j;
        }
    }
    return std::nullopt;
}

NCPoly embed_x_poly(const SparsePoly& p, unsigned ypow) {
    NCPoly out;
    std::map<unsigned, SparsePoly> by_xdeg;
    for (const auto& [m, c] : p.terms()) {
        unsigned xdeg = m.degree(Symbol::X());
        Monomial rest;
        for (const auto& [sym, e] : m.entries())
            if (sym != Symbol::X()) rest = rest * Monomial::var(sym, e);
        by_xdeg[xdeg].add_term(rest, c);
    }
    for (auto& [xdeg, coeff] : by_xdeg) out.add_term(xdeg, ypow, Frac(std::move(coeff)));
    return out;
}

}  // namespace qmpl
