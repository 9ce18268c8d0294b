#include "qmpl/denprod.hpp"

namespace qmpl {

namespace {

// Per-thread intern table for denominator factors. Worker threads own their
// values end to end, so thread-local tables need no locking.
struct InternTable {
    std::map<SparsePoly, int> ids;
    std::vector<SparsePoly> polys;
    std::map<std::map<int, int>, SparsePoly> expansions;

    int intern(const SparsePoly& p) {
        auto [it, inserted] = ids.emplace(p, static_cast<int>(polys.size()));
        if (inserted) polys.push_back(p);
        return it->second;
    }
};

InternTable& table() {
    thread_local InternTable t;
    return t;
}

// expand by peeling one factor off the largest id, reusing smaller products
const SparsePoly& expand_factored(const std::map<int, int>& factors) {
    InternTable& t = table();
    auto found = t.expansions.find(factors);
    if (found != t.expansions.end()) return found->second;
    SparsePoly result;
    if (factors.empty()) {
        result = SparsePoly::one();
    } else {
        auto rest = factors;
        auto last = std::prev(rest.end());
        const int id = last->first;
        if (--last->second == 0) rest.erase(last);
        result = expand_factored(rest) * t.polys[static_cast<std::size_t>(id)];
    }
    return t.expansions.emplace(factors, std::move(result)).first->second;
}

}  // namespace

DenProduct DenProduct::of(const SparsePoly& factor, int exp) {
    DenProduct d;
    d.mul(factor, exp);
    return d;
}

DenProduct& DenProduct::mul(const SparsePoly& factor, int exp) {
    if (exp == 0 || factor.is_one()) return *this;
    if (factor.is_zero()) throw DivisionByZeroError("zero denominator factor");
    factors_[table().intern(factor)] += exp;
    return *this;
}

DenProduct& DenProduct::mul(const DenProduct& o) {
    for (const auto& [id, e] : o.factors_) factors_[id] += e;
    return *this;
}

DenProduct DenProduct::lcm(const DenProduct& o) const {
    DenProduct r = *this;
    for (const auto& [id, e] : o.factors_) {
        auto [it, inserted] = r.factors_.emplace(id, e);
        if (!inserted && it->second < e) it->second = e;
    }
    return r;
}

DenProduct DenProduct::quotient(const DenProduct& o) const {
    DenProduct r = *this;
    for (const auto& [id, e] : o.factors_) {
        auto it = r.factors_.find(id);
        if (it == r.factors_.end() || it->second < e)
            throw Error("factored quotient is not a polynomial");
        it->second -= e;
        if (it->second == 0) r.factors_.erase(it);
    }
    return r;
}

bool DenProduct::divides(const DenProduct& o) const {
    for (const auto& [id, e] : factors_) {
        auto it = o.factors_.find(id);
        if (it == o.factors_.end() || it->second < e) return false;
    }
    return true;
}

const SparsePoly& DenProduct::expand() const { return expand_factored(factors_); }

void FracSum::add(const SparsePoly& num, const DenProduct& den) {
    if (num.is_zero()) return;
    if (num_.is_zero()) {
        num_ = num;
        den_ = den;
        return;
    }
    const DenProduct common = den_.lcm(den);
    if (!(common == den_)) num_ *= common.quotient(den_).expand();
    if (common == den)
        num_ += num;
    else
        num_ += num * common.quotient(den).expand();
    den_ = common;
}

bool fracsum_eq(const FracSum& a, const FracSum& b) {
    const DenProduct common = a.den().lcm(b.den());
    SparsePoly lhs = a.num(), rhs = b.num();
    if (!(common == a.den())) lhs *= common.quotient(a.den()).expand();
    if (!(common == b.den())) rhs *= common.quotient(b.den()).expand();
    return lhs == rhs;
}

}  // namespace qmpl
