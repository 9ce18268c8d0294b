#include "qmpl/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qmpl {

Monomial Monomial::var(Symbol s, unsigned e) {
    Monomial m;
    if (e > 0) m.entries_.push_back({s, e});
    return m;
}

unsigned Monomial::degree(Symbol s) const {
    for (const auto& [sym, e] : entries_)
        if (sym == s) return e;
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [sym, e] : entries_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto i = entries_.begin(), j = o.entries_.begin();
    while (i != entries_.end() && j != o.entries_.end()) {
        if (i->first < j->first) {
            r.entries_.push_back(*i++);
        } else if (j->first < i->first) {
            r.entries_.push_back(*j++);
        } else {
            r.entries_.push_back({i->first, i->second + j->second});
            ++i, ++j;
        }
    }
    r.entries_.insert(r.entries_.end(), i, entries_.end());
    r.entries_.insert(r.entries_.end(), j, o.entries_.end());
    return r;
}

Monomial Monomial::pow(unsigned e) const {
    Monomial r;
    if (e == 0) return r;
    r.entries_ = entries_;
    for (auto& [sym, ex] : r.entries_) ex *= e;
    return r;
}

std::string Monomial::str() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const auto& [sym, e] : entries_) {
        if (!s.empty()) s += "*";
        s += sym.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

SparsePoly::SparsePoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
}

SparsePoly SparsePoly::var(Symbol s, unsigned e) {
    SparsePoly p;
    p.terms_.emplace(Monomial::var(s, e), Rational(1));
    return p;
}

SparsePoly SparsePoly::term(const Rational& c, const Monomial& m) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool SparsePoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned SparsePoly::degree(Symbol s) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(s));
    return d;
}

std::set<Symbol> SparsePoly::symbols() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [sym, e] : m.entries()) out.insert(sym);
    return out;
}

Rational SparsePoly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.size() > term_budget())
        throw ResourceLimitError("polynomial exceeds term budget");
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    // iterate the smaller factor on the outside to keep map lookups clustered
    const SparsePoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const SparsePoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ma, ca] : outer.terms_)
        for (const auto& [mb, cb] : inner.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly acc = SparsePoly::one();
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool operator<(const SparsePoly& a, const SparsePoly& b) {
    auto i = a.terms_.begin(), j = b.terms_.begin();
    for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second < j->second;
    }
    return i == a.terms_.end() && j != b.terms_.end();
}

Rational SparsePoly::eval(const std::map<Symbol, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [sym, e] : m.entries()) {
            auto it = assignment.find(sym);
            if (it == assignment.end())
                throw MissingSymbolError("unassigned symbol: " + sym.name());
            v *= it->second.pow(static_cast<long>(e));
        }
        total += v;
    }
    return total;
}

SparsePoly SparsePoly::subst(const std::map<Symbol, Rational>& assignment) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        Monomial rest;
        for (const auto& [sym, e] : m.entries()) {
            auto it = assignment.find(sym);
            if (it == assignment.end())
                rest = rest * Monomial::var(sym, e);
            else
                v *= it->second.pow(static_cast<long>(e));
        }
        out.add_term(rest, v);
    }
    return out;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            s += mag.str();
        } else {
            if (!mag.is_one()) s += mag.str() + "*";
            s += m.str();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.str(); }

}  // namespace qmpl
