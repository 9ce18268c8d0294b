#include "qmpl/identities.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qmpl {

namespace {

// ---- factored normal-form accumulation ------------------------------------

// Normal form under construction: one running fraction sum per (j,k) key.
// Terms arrive as numerator polynomials over factored denominators, so long
// tuple sums stay on a shared common denominator per key.
class NCBuilder {
  public:
    void add(NCPoly::Key key, const SparsePoly& num, const DenProduct& den) {
        if (num.is_zero()) return;
        terms_[key].add(num, den);
    }

    // folds a whole normal form in, optionally left-multiplied by y^{left_ypow};
    // y^m x^j = q^{mj} x^j y^m, so the shift twists each coefficient.
    // Coefficients with nontrivial denominators contribute them as extra
    // (atomic) factors.
    void add_nc(const NCPoly& p, const DenProduct& den, unsigned left_ypow = 0) {
        for (const auto& [key, c] : p.terms()) {
            NCPoly::Key shifted{key.first, key.second + left_ypow};
            SparsePoly num = c.num();
            if (left_ypow > 0 && key.first > 0) num *= q_power(left_ypow * key.first);
            if (c.has_unit_den()) {
                add(shifted, num, den);
            } else {
                DenProduct full = den;
                full.mul(c.den());
                add(shifted, num, full);
            }
        }
    }

    NCPoly freeze() const {
        NCPoly out;
        for (const auto& [key, fs] : terms_)
            if (!fs.is_zero()) out.add_term(key.first, key.second, fs.value());
        return out;
    }

    // first key (lexicographic) whose running sums differ, with printable sides
    static std::optional<std::string> first_difference(const NCBuilder& a, const NCBuilder& b) {
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        const FracSum empty;
        auto report = [](NCPoly::Key key, const FracSum& lhs, const FracSum& rhs) {
            std::ostringstream os;
            os << "at x^" << key.first << " y^" << key.second << ": " << clip(lhs.value().str())
               << " vs " << clip(rhs.value().str());
            return os.str();
        };
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                if (!i->second.is_zero()) return report(i->first, i->second, empty);
                ++i;
            } else if (i == a.terms_.end() || j->first < i->first) {
                if (!j->second.is_zero()) return report(j->first, empty, j->second);
                ++j;
            } else {
                if (!fracsum_eq(i->second, j->second)) return report(i->first, i->second, j->second);
                ++i, ++j;
            }
        }
        return std::nullopt;
    }

  private:
    std::map<NCPoly::Key, FracSum> terms_;
};

// local cache of NC factor powers used by the tuple builders
class NCPowers {
  public:
    explicit NCPowers(NCPoly base) : base_(std::move(base)), pows_{NCPoly::one()} {}
    const NCPoly& operator()(int e) {
        while (static_cast<int>(pows_.size()) <= e) pows_.push_back(pows_.back() * base_);
        return pows_[static_cast<std::size_t>(e)];
    }

  private:
    NCPoly base_;
    std::vector<NCPoly> pows_;
};

class PolyPowers {
  public:
    explicit PolyPowers(SparsePoly base) : base_(std::move(base)), pows_{SparsePoly::one()} {}
    const SparsePoly& operator()(int e) {
        while (static_cast<int>(pows_.size()) <= e) pows_.push_back(pows_.back() * base_);
        return pows_[static_cast<std::size_t>(e)];
    }

  private:
    SparsePoly base_;
    std::vector<SparsePoly> pows_;
};

NCPoly tx_plus_y(const Frac& t) { return NCPoly::monomial(1, 0, t) + NCPoly::y(); }

// sum_{k=1..n} [n choose k]_q (xscale x)^k y^{n-k} l_k(s,t), factored
NCBuilder bm_sum_parts(int n, const Index& s, const TVector& t, const Frac& xscale) {
    NCBuilder b;
    for (int k = 1; k <= n; ++k) {
        FracSum lk = mpl_star_q_sum(k, s, t);
        if (lk.is_zero()) continue;
        SparsePoly num = q_binomial(n, k) * lk.num();
        DenProduct den = lk.den();
        if (!xscale.num().is_one()) num *= xscale.num().pow(static_cast<unsigned>(k));
        if (!xscale.den().is_one()) den.mul(xscale.den(), k);
        b.add({static_cast<unsigned>(k), static_cast<unsigned>(n - k)}, num, den);
    }
    return b;
}

// the ordered tuple expansion of the same element, factored
NCBuilder bm_tuple_parts(int n, const Index& s, const TVector& t) {
    if (n < 1) throw Error("tuple form needs n >= 1");
    if (s.is_empty()) throw Error("tuple form needs a nonempty index");
    const int d = s.depth();
    const int w = s.weight();
    NCBuilder b;
    NCPowers xy_pow(NCPoly::x() + NCPoly::y());
    std::vector<NCPowers> t_pow;
    for (int r = 1; r <= d; ++r) t_pow.emplace_back(tx_plus_y(t[static_cast<std::size_t>(r - 1)]));
    for (WeaklyDecreasingTuples tuples(n, w); tuples.get(); tuples.advance()) {
        const std::vector<int>& tup = *tuples.get();
        auto nn = [&](int i) { return tup[static_cast<std::size_t>(i - 1)]; };
        // ordered product, left to right
        NCPoly prod = xy_pow(n - nn(1));
        unsigned ypow = 0;
        for (int r = 1; r < d; ++r) {
            ypow += static_cast<unsigned>(nn(s.partial(r - 1) + 1) - nn(s.partial(r)));
            const int e = nn(s.partial(r)) - nn(s.partial(r) + 1);
            if (e > 0) {
                if (ypow > 0) prod = prod * NCPoly::monomial(0, ypow, Frac::one());
                ypow = 0;
                prod = prod * t_pow[static_cast<std::size_t>(r - 1)](e);
            }
        }
        ypow += static_cast<unsigned>(nn(s.partial(d - 1) + 1) - nn(s.partial(d)));
        if (ypow > 0) prod = prod * NCPoly::monomial(0, ypow, Frac::one());
        const int last = nn(s.partial(d));
        NCPoly bracket = t_pow[static_cast<std::size_t>(d - 1)](last) -
                         NCPoly::monomial(0, static_cast<unsigned>(last), Frac::one());
        prod = prod * bracket;
        DenProduct den;
        for (int i = 1; i <= w; ++i) den.mul(q_int(nn(i)));
        b.add_nc(prod, den);
    }
    return b;
}

Verdict make_verdict(std::string suite, std::string params, std::optional<std::string> witness) {
    Verdict v;
    v.suite = std::move(suite);
    v.params = std::move(params);
    if (witness) {
        v.status = Verdict::Status::fail;
        v.witness = std::move(*witness);
    }
    return v;
}

std::string param_ns(int n, const Index& s) { return "n=" + std::to_string(n) + " s=" + s.str(); }

std::optional<std::string> poly_first_difference(const SparsePoly& a, const SparsePoly& b) {
    if (a == b) return std::nullopt;
    const SparsePoly diff = a - b;
    const auto& [m, c] = *diff.terms().begin();
    std::ostringstream os;
    os << "at " << m.str() << ": coefficients differ by " << c.str();
    return os.str();
}

std::optional<std::string> frac_difference(const Frac& a, const Frac& b) {
    if (a == b) return std::nullopt;
    return "lhs = " + clip(a.str()) + " vs rhs = " + clip(b.str());
}

}  // namespace

std::string clip(const std::string& s, std::size_t max) {
    if (s.size() <= max) return s;
    return s.substr(0, max) + "...";
}

// ---- builders --------------------------------------------------------------

NCPoly bm_sum_q(int n, const Index& s, const TVector& t, const Frac& xscale) {
    if (n < 0) throw Error("bm_sum_q needs n >= 0");
    return bm_sum_parts(n, s, t, xscale).freeze();
}

NCPoly bm_tuple_form_q(int n, const Index& s, const TVector& t) {
    return bm_tuple_parts(n, s, t).freeze();
}

SparsePoly bm_sum_1(int n, const Index& s, const TVector& t) {
    SparsePoly out;
    for (int k = 1; k <= n; ++k) {
        Frac lk = mpl_star_q1(k, s, t);
        if (!lk.has_unit_den()) throw Error("bm_sum_1 needs denominator-free t entries");
        const Monomial xy = Monomial::var(Symbol::X(), static_cast<unsigned>(k)) *
                            Monomial::var(Symbol::Y(), static_cast<unsigned>(n - k));
        out += lk.num() * SparsePoly::term(binomial(n, k), xy);
    }
    return out;
}

SparsePoly bm_tuple_form_1(int n, const Index& s, const TVector& t) {
    if (n < 1 || s.is_empty()) throw Error("tuple form needs n >= 1 and a nonempty index");
    const int d = s.depth();
    const int w = s.weight();
    const SparsePoly x = SparsePoly::var(Symbol::X());
    const SparsePoly y = SparsePoly::var(Symbol::Y());
    PolyPowers xy_pow(x + y);
    PolyPowers y_pow(y);
    std::vector<PolyPowers> t_pow;
    for (int r = 1; r <= d; ++r) {
        if (!t[static_cast<std::size_t>(r - 1)].has_unit_den())
            throw Error("bm_tuple_form_1 needs denominator-free t entries");
        t_pow.emplace_back(t[static_cast<std::size_t>(r - 1)].num() * x + y);
    }
    SparsePoly out;
    for (WeaklyDecreasingTuples tuples(n, w); tuples.get(); tuples.advance()) {
        const std::vector<int>& tup = *tuples.get();
        auto nn = [&](int i) { return tup[static_cast<std::size_t>(i - 1)]; };
        int yexp = nn(1);
        Rational c(1);
        for (int r = 1; r <= d; ++r) yexp -= nn(s.partial(r));
        for (int r = 1; r < d; ++r) yexp += nn(s.partial(r) + 1);
        for (int i = 1; i <= w; ++i) c /= Rational(nn(i));
        SparsePoly term = xy_pow(n - nn(1)) * y_pow(yexp);
        for (int r = 1; r < d; ++r)
            term *= t_pow[static_cast<std::size_t>(r - 1)](nn(s.partial(r)) - nn(s.partial(r) + 1));
        const int last = nn(s.partial(d));
        term *= t_pow[static_cast<std::size_t>(d - 1)](last) - y_pow(last);
        out += term * c;
    }
    return out;
}

Frac cauchy_bm_lhs(int n, const Index& s, const TVector& t) {
    if (n < 1) throw Error("cauchy_bm_lhs needs n >= 1");
    FracSum sum;
    const SparsePoly x = SparsePoly::var(Symbol::X());
    const SparsePoly a = SparsePoly::var(Symbol::A());
    for (int k = 1; k <= n; ++k) {
        FracSum lk = mpl_star_q_sum(k, s, t);
        if (lk.is_zero()) continue;
        SparsePoly num = q_binomial(n, k) * q_power(static_cast<unsigned>(k * (k - 1) / 2)) *
                         x.pow(static_cast<unsigned>(k)) * a.pow(static_cast<unsigned>(n - k)) *
                         lk.num();
        sum.add(num, lk.den());
    }
    return sum.value();
}

Frac cauchy_bm_rhs(int n, const Index& s, const TVector& t) {
    if (n < 1 || s.is_empty()) throw Error("cauchy_bm_rhs needs n >= 1 and a nonempty index");
    const int d = s.depth();
    const int w = s.weight();
    const SparsePoly x = SparsePoly::var(Symbol::X());
    const SparsePoly a = SparsePoly::var(Symbol::A());
    PolyPowers a_pow(a);
    FracSum sum;
    for (WeaklyDecreasingTuples tuples(n, w); tuples.get(); tuples.advance()) {
        const std::vector<int>& tup = *tuples.get();
        auto nn = [&](int i) { return tup[static_cast<std::size_t>(i - 1)]; };
        int aexp = nn(1);
        for (int r = 1; r <= d; ++r) aexp -= nn(s.partial(r));
        for (int r = 1; r < d; ++r) aexp += nn(s.partial(r) + 1);
        SparsePoly term = q_rising(x, a, n - nn(1));
        for (int r = 1; r < d; ++r) {
            if (!t[static_cast<std::size_t>(r - 1)].has_unit_den())
                throw Error("cauchy_bm_rhs needs denominator-free t entries");
            term *= q_rising(t[static_cast<std::size_t>(r - 1)].num() * x, a,
                             nn(s.partial(r)) - nn(s.partial(r) + 1), n - nn(s.partial(r)));
        }
        const int last = nn(s.partial(d));
        term *= q_rising(t[static_cast<std::size_t>(d - 1)].num() * x, a, last, n - last) -
                a_pow(last);
        term *= a_pow(aexp);
        DenProduct den;
        for (int i = 1; i <= w; ++i) den.mul(q_int(nn(i)));
        sum.add(term, den);
    }
    return sum.value();
}

SparsePoly ss_polylog_side(int n, const Index& s, const TVector& t, bool alternating) {
    if (n < 1 || s.is_empty()) throw Error("ss_polylog_side needs n >= 1 and a nonempty index");
    const int d = s.depth();
    SparsePoly out;
    for (WeaklyDecreasingTuples tuples(n, d); tuples.get(); tuples.advance()) {
        const std::vector<int>& tup = *tuples.get();
        Rational c(1);
        SparsePoly mono = SparsePoly::one();
        for (int i = 0; i < d; ++i) {
            const int e = (i + 1 < d) ? tup[static_cast<std::size_t>(i)] - tup[static_cast<std::size_t>(i + 1)]
                                      : tup[static_cast<std::size_t>(i)];
            if (e > 0) {
                if (!t[static_cast<std::size_t>(i)].has_unit_den())
                    throw Error("ss sides need denominator-free t entries");
                mono *= t[static_cast<std::size_t>(i)].num().pow(static_cast<unsigned>(e));
            }
            c /= Rational(tup[static_cast<std::size_t>(i)]).pow(s.part(i + 1));
        }
        if (alternating) {
            c *= binomial(n, tup[0]);
            if (tup[0] % 2 != 0) c = -c;
        }
        out += mono * c;
    }
    return out;
}

SparsePoly ss_product_side(int n, const Index& s, const TVector& t, bool alternating) {
    if (n < 1 || s.is_empty()) throw Error("ss_product_side needs n >= 1 and a nonempty index");
    const int d = s.depth();
    const int w = s.weight();
    std::vector<PolyPowers> omt_pow;  // (1 - t_r)^e
    for (int r = 1; r <= d; ++r) {
        if (!t[static_cast<std::size_t>(r - 1)].has_unit_den())
            throw Error("ss sides need denominator-free t entries");
        omt_pow.emplace_back(SparsePoly::one() - t[static_cast<std::size_t>(r - 1)].num());
    }
    SparsePoly out;
    for (WeaklyDecreasingTuples tuples(n, w); tuples.get(); tuples.advance()) {
        const std::vector<int>& tup = *tuples.get();
        auto nn = [&](int i) { return tup[static_cast<std::size_t>(i - 1)]; };
        Rational c(1);
        for (int i = 1; i <= w; ++i) c /= Rational(nn(i));
        if (alternating) {
            c *= binomial(n, nn(1));
            if (nn(1) % 2 != 0) c = -c;
        }
        SparsePoly term = SparsePoly::one();
        for (int r = 1; r < d; ++r)
            term *= omt_pow[static_cast<std::size_t>(r - 1)](nn(s.partial(r)) - nn(s.partial(r) + 1));
        const int last = nn(s.partial(d));
        term *= omt_pow[static_cast<std::size_t>(d - 1)](last) - SparsePoly::one();
        out += term * c;
    }
    return out;
}

std::vector<Frac> binomial_inversion(std::span<const Frac> seq, InversionDirection dir) {
    std::vector<Frac> out;
    out.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        Frac v;
        for (std::size_t k = 0; k <= n; ++k) {
            Frac term = seq[k] * Frac(SparsePoly(binomial(static_cast<int>(n), static_cast<int>(k))));
            if (dir == InversionDirection::backward && (n - k) % 2 != 0) term = -term;
            v += term;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// ---- verifiers -------------------------------------------------------------

Verdict verify_schutzenberger(int n) {
    const NCPoly lhs = (NCPoly::x() + NCPoly::y()).pow(static_cast<unsigned>(n));
    NCPoly rhs;
    for (int k = 0; k <= n; ++k)
        rhs.add_term(static_cast<unsigned>(k), static_cast<unsigned>(n - k), Frac(q_binomial(n, k)));
    std::optional<std::string> witness;
    if (auto diff = nc_first_difference(lhs, rhs)) {
        const auto& [key, l, r] = *diff;
        witness = "at x^" + std::to_string(key.first) + " y^" + std::to_string(key.second) + ": " +
                  clip(l.str()) + " vs " + clip(r.str());
    }
    return make_verdict("schutzenberger", "n=" + std::to_string(n), witness);
}

namespace {

// [n choose k]_q / [k]^s and its expansion over tuples n >= n1 >= ... >= ns >= k
std::pair<FracSum, FracSum> lemma21_sides(int n, int k, int s_exp) {
    FracSum lhs;
    DenProduct lden;
    lden.mul(q_int(k), s_exp);
    lhs.add(q_binomial(n, k), lden);
    FracSum rhs;
    for (WeaklyDecreasingTuples tuples(n, s_exp, k); tuples.get(); tuples.advance()) {
        const std::vector<int>& tup = *tuples.get();
        DenProduct den;
        for (int v : tup) den.mul(q_int(v));
        const int ns = tup.back();
        rhs.add(q_power(static_cast<unsigned>((n - ns) * k)) * q_binomial(ns, k), den);
    }
    return {std::move(lhs), std::move(rhs)};
}

std::string param_lemma21(int n, int k, int s_exp) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + std::to_string(s_exp);
}

}  // namespace

Verdict verify_lemma21(int n, int k, int s_exp) {
    if (!(n >= k && k >= 1 && s_exp >= 1)) throw Error("lemma21 needs n >= k >= 1, s >= 1");
    const auto [lhs, rhs] = lemma21_sides(n, k, s_exp);
    std::optional<std::string> witness;
    if (!fracsum_eq(lhs, rhs))
        witness = "lhs = " + clip(lhs.value().str()) + " vs rhs = " + clip(rhs.value().str());
    return make_verdict("lemma21", param_lemma21(n, k, s_exp), witness);
}

namespace {

// both sides of the recurrence bm_sum(n) - (x+y) bm_sum(n-1) = case expression
struct RecurrenceSides {
    NCBuilder lhs, rhs;
    int case_id = 0;
};

RecurrenceSides lemma22_sides(int n, const Index& s, const TVector& t) {
    const int d = s.depth();
    const int s1 = s.part(1);
    RecurrenceSides out;

    // left side: bm_sum(n) - (x+y) bm_sum(n-1), kept factored per key
    NCBuilder& lhs = out.lhs;
    lhs = bm_sum_parts(n, s, t, Frac::one());
    if (n >= 2) {
        const NCPoly prev = bm_sum_parts(n - 1, s, t, Frac::one()).freeze();
        for (const auto& [key, c] : prev.terms()) {
            // (x+y) x^j y^k = x^{j+1} y^k + q^j x^j y^{k+1}
            DenProduct den;
            SparsePoly num = c.num();
            if (!c.has_unit_den()) den.mul(c.den());
            lhs.add({key.first + 1, key.second}, -num, den);
            lhs.add({key.first, key.second + 1},
                    -(num * q_power(key.first)), den);
        }
    }

    NCBuilder& rhs = out.rhs;
    const Frac t1 = t[0];
    int& case_id = out.case_id;
    if (d >= 2) {
        TVector ratios;
        for (int i = 2; i <= d; ++i) ratios.push_back(t[static_cast<std::size_t>(i - 1)] / t1);
        if (s1 >= 2) {
            case_id = 1;
            std::map<int, NCPoly> inner_by_m;
            for (WeaklyDecreasingTuples tuples(n, s1 - 1); tuples.get(); tuples.advance()) {
                const std::vector<int>& tup = *tuples.get();
                const int m = tup.back();
                auto found = inner_by_m.find(m);
                if (found == inner_by_m.end())
                    found = inner_by_m.emplace(m, bm_sum_parts(m, s.tail(), ratios, t1).freeze()).first;
                DenProduct den;
                den.mul(q_int(n));
                for (int v : tup) den.mul(q_int(v));
                rhs.add_nc(found->second, den, static_cast<unsigned>(n - m));
            }
        } else {
            case_id = 2;
            const NCPoly inner = bm_sum_parts(n, s.tail(), ratios, t1).freeze();
            DenProduct den;
            den.mul(q_int(n));
            rhs.add_nc(inner, den);
        }
    } else {
        NCPowers txy(tx_plus_y(t1));
        if (s1 >= 2) {
            case_id = 3;
            for (WeaklyDecreasingTuples tuples(n, s1 - 1); tuples.get(); tuples.advance()) {
                const std::vector<int>& tup = *tuples.get();
                const int m = tup.back();
                DenProduct den;
                den.mul(q_int(n));
                for (int v : tup) den.mul(q_int(v));
                NCPoly bracket = txy(m) - NCPoly::monomial(0, static_cast<unsigned>(m), Frac::one());
                rhs.add_nc(bracket, den, static_cast<unsigned>(n - m));
            }
        } else {
            case_id = 4;
            DenProduct den;
            den.mul(q_int(n));
            NCPoly bracket = txy(n) - NCPoly::monomial(0, static_cast<unsigned>(n), Frac::one());
            rhs.add_nc(bracket, den);
        }
    }
    return out;
}

}  // namespace

Verdict verify_lemma22(int n, const Index& s) {
    if (n < 1 || s.is_empty()) throw Error("lemma22 needs n >= 1 and a nonempty index");
    const TVector t = symbolic_t(s.depth());
    RecurrenceSides sides = lemma22_sides(n, s, t);
    auto witness = NCBuilder::first_difference(sides.lhs, sides.rhs);
    return make_verdict("lemma22", param_ns(n, s) + " case=" + std::to_string(sides.case_id),
                        witness);
}

Verdict verify_main_theorem(int n, const Index& s) {
    if (n < 1 || s.is_empty()) throw Error("main theorem needs n >= 1 and a nonempty index");
    const TVector t = symbolic_t(s.depth());
    NCBuilder lhs = bm_sum_parts(n, s, t, Frac::one());
    NCBuilder rhs = bm_tuple_parts(n, s, t);
    auto witness = NCBuilder::first_difference(lhs, rhs);
    return make_verdict("main-theorem", param_ns(n, s), witness);
}

Verdict verify_corollary_direct(int n, const Index& s) {
    const TVector t = symbolic_t(s.depth());
    const SparsePoly lhs = bm_sum_1(n, s, t);
    const SparsePoly rhs = bm_tuple_form_1(n, s, t);
    auto witness = poly_first_difference(lhs, rhs);
    return make_verdict("corollary", param_ns(n, s) + " check=direct", witness);
}

Verdict verify_corollary_limit(int n, const Index& s) {
    const TVector t = symbolic_t(s.depth());
    const Frac lhs_lim = bm_sum_q(n, s, t).limit_q1();
    const Frac rhs_lim = bm_tuple_form_q(n, s, t).limit_q1();
    const Frac cor_lhs{bm_sum_1(n, s, t)};
    const Frac cor_rhs{bm_tuple_form_1(n, s, t)};
    std::optional<std::string> witness;
    if (auto d = frac_difference(lhs_lim, cor_lhs))
        witness = "limit of binomial sum: " + *d;
    else if (auto d2 = frac_difference(rhs_lim, cor_rhs))
        witness = "limit of tuple form: " + *d2;
    return make_verdict("corollary", param_ns(n, s) + " check=limit", witness);
}

Verdict verify_gencev(int n, const Index& s, const Rational& a, const Rational& p) {
    if (n < 1 || s.is_empty()) throw Error("gencev needs n >= 1 and a nonempty index");
    const int d = s.depth();
    const int w = s.weight();
    Rational lhs(0);
    for (int k = 1; k <= n; ++k) {
        const Rational zeta = zeta_star_k(k, s, Frac(SparsePoly(a))).eval({});
        lhs += binomial(n, k) * p.pow(k) * (Rational(1) - p).pow(n - k) * zeta;
    }
    Rational rhs(0);
    const Rational q0 = Rational(1) - p;          // (1-p)
    const Rational shifted = q0 + a * p;          // (1-p+ap)
    for (WeaklyDecreasingTuples tuples(n, w); tuples.get(); tuples.advance()) {
        const std::vector<int>& tup = *tuples.get();
        auto nn = [&](int i) { return tup[static_cast<std::size_t>(i - 1)]; };
        int e = 0;
        for (int r = 1; r <= d; ++r) e += nn(s.partial(r - 1) + 1) - nn(s.partial(r));
        Rational c = q0.pow(e);
        for (int i = 1; i <= w; ++i) c /= Rational(nn(i));
        rhs += c * (shifted.pow(nn(w)) - q0.pow(nn(w)));
    }
    std::optional<std::string> witness;
    if (lhs != rhs) witness = "lhs = " + lhs.str() + " vs rhs = " + rhs.str();
    return make_verdict("gencev", param_ns(n, s) + " a=" + a.str() + " p=" + p.str(), witness);
}

Verdict verify_mneimneh(int n, const Rational& p) {
    if (n < 1) throw Error("mneimneh needs n >= 1");
    Rational lhs(0);
    for (int k = 1; k <= n; ++k)
        lhs += harmonic(k) * binomial(n, k) * p.pow(k) * (Rational(1) - p).pow(n - k);
    Rational rhs(0);
    for (int i = 1; i <= n; ++i)
        rhs += (Rational(1) - (Rational(1) - p).pow(i)) / Rational(i);
    std::optional<std::string> witness;
    if (lhs != rhs) witness = "lhs = " + lhs.str() + " vs rhs = " + rhs.str();
    return make_verdict("mneimneh", "n=" + std::to_string(n) + " p=" + p.str(), witness);
}

Verdict verify_boyadzhiev(int n, const Rational& lambda, const Rational& mu) {
    if (n < 1) throw Error("boyadzhiev needs n >= 1");
    Rational lhs(0);
    for (int k = 1; k <= n; ++k)
        lhs += binomial(n, k) * harmonic(k) * lambda.pow(n - k) * mu.pow(k);
    Rational rhs = harmonic(n) * (lambda + mu).pow(n);
    for (int j = 1; j <= n; ++j)
        rhs -= lambda.pow(j) * (lambda + mu).pow(n - j) / Rational(j);
    std::optional<std::string> witness;
    if (lhs != rhs) witness = "lhs = " + lhs.str() + " vs rhs = " + rhs.str();
    return make_verdict("boyadzhiev",
                        "n=" + std::to_string(n) + " lambda=" + lambda.str() + " mu=" + mu.str(),
                        witness);
}

Verdict verify_ss1(int n, const Index& s) {
    const TVector t = symbolic_t(s.depth());
    const SparsePoly lhs = ss_polylog_side(n, s, t, /*alternating=*/true);
    const SparsePoly rhs = ss_product_side(n, s, t, /*alternating=*/false);
    auto witness = poly_first_difference(lhs, rhs);
    return make_verdict("ss1", param_ns(n, s), witness);
}

Verdict verify_ss2(int n, const Index& s) {
    const TVector t = symbolic_t(s.depth());
    const SparsePoly lhs = ss_polylog_side(n, s, t, /*alternating=*/false);
    const SparsePoly rhs = ss_product_side(n, s, t, /*alternating=*/true);
    auto witness = poly_first_difference(lhs, rhs);
    return make_verdict("ss2", param_ns(n, s), witness);
}

Verdict verify_euler(int n) {
    Rational lhs(0);
    for (int k = 1; k <= n; ++k) {
        Rational term = binomial(n, k) / Rational(k);
        lhs += (k % 2 == 1) ? term : -term;
    }
    const Rational rhs = harmonic(n);
    std::optional<std::string> witness;
    if (lhs != rhs) witness = "lhs = " + lhs.str() + " vs rhs = " + rhs.str();
    return make_verdict("ss1", "n=" + std::to_string(n) + " euler", witness);
}

Verdict verify_ss_inversion_link(int n, const Index& s) {
    const TVector t = symbolic_t(s.depth());
    const int w = s.weight();
    // a_k = (-1)^k l_k(s,t), with a_0 = 0
    std::vector<Frac> a{Frac::zero()};
    for (int k = 1; k <= n; ++k) {
        SparsePoly lk = ss_polylog_side(k, s, t, /*alternating=*/false);
        if (k % 2 != 0) lk = -lk;
        a.push_back(Frac(std::move(lk)));
    }
    const std::vector<Frac> b = binomial_inversion(a, InversionDirection::forward);
    // b_m must equal the product-side sum with first entry pinned to m
    for (int m = 1; m <= n; ++m) {
        SparsePoly pinned;
        {
            std::vector<PolyPowers> omt_pow;
            for (int r = 1; r <= s.depth(); ++r)
                omt_pow.emplace_back(SparsePoly::one() - t[static_cast<std::size_t>(r - 1)].num());
            auto add_tuple = [&](const std::vector<int>& full) {
                auto nn = [&](int i) { return full[static_cast<std::size_t>(i - 1)]; };
                Rational c(1);
                for (int i = 1; i <= w; ++i) c /= Rational(nn(i));
                SparsePoly term = SparsePoly::one();
                for (int r = 1; r < s.depth(); ++r)
                    term *= omt_pow[static_cast<std::size_t>(r - 1)](nn(s.partial(r)) - nn(s.partial(r) + 1));
                const int last = nn(s.partial(s.depth()));
                term *= omt_pow[static_cast<std::size_t>(s.depth() - 1)](last) - SparsePoly::one();
                pinned += term * c;
            };
            if (w == 1) {
                add_tuple({m});
            } else {
                for (WeaklyDecreasingTuples rest(m, w - 1); rest.get(); rest.advance()) {
                    std::vector<int> full{m};
                    full.insert(full.end(), rest.get()->begin(), rest.get()->end());
                    add_tuple(full);
                }
            }
        }
        if (!(b[static_cast<std::size_t>(m)] == Frac(pinned))) {
            return make_verdict("ss2", param_ns(n, s) + " link=inversion",
                                "transformed sequence differs at m=" + std::to_string(m));
        }
    }
    // and the backward transform must restore a
    const std::vector<Frac> back = binomial_inversion(b, InversionDirection::backward);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(back[i] == a[i]))
            return make_verdict("ss2", param_ns(n, s) + " link=inversion",
                                "roundtrip differs at k=" + std::to_string(i));
    return make_verdict("ss2", param_ns(n, s) + " link=inversion", std::nullopt);
}

Verdict verify_inversion_roundtrip(std::span<const Frac> seq, const std::string& label) {
    const std::vector<Frac> fwd = binomial_inversion(seq, InversionDirection::forward);
    const std::vector<Frac> back = binomial_inversion(fwd, InversionDirection::backward);
    std::optional<std::string> witness;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!(back[i] == seq[i])) {
            witness = "roundtrip differs at position " + std::to_string(i) + ": " +
                      clip(back[i].str()) + " vs " + clip(seq[i].str());
            break;
        }
    }
    return make_verdict("inversion", label, witness);
}

namespace {

std::pair<Frac, Frac> cauchy_binomial_sides(int n, const Frac& a) {
    const SparsePoly x = SparsePoly::var(Symbol::X());
    // (x+a)^{[n]} as a fraction: numerators prod (q^{k-1} den(a) x + num(a)) over den(a)^n
    Frac lhs = Frac::one();
    for (int k = 1; k <= n; ++k)
        lhs *= Frac(q_power(static_cast<unsigned>(k - 1)) * a.den() * x + a.num(), a.den());
    FracSum rhs;
    for (int k = 0; k <= n; ++k) {
        DenProduct den;
        if (!a.den().is_one()) den.mul(a.den(), n - k);
        rhs.add(q_binomial(n, k) * q_power(static_cast<unsigned>(k * (k - 1) / 2)) *
                    x.pow(static_cast<unsigned>(k)) * a.num().pow(static_cast<unsigned>(n - k)),
                den);
    }
    return {std::move(lhs), rhs.value()};
}

}  // namespace

Verdict verify_cauchy_binomial(int n, const Frac& a) {
    if (n < 0) throw Error("cauchy binomial needs n >= 0");
    const auto [lhs, rhs] = cauchy_binomial_sides(n, a);
    auto witness = frac_difference(lhs, rhs);
    return make_verdict("cauchy-binomial", "n=" + std::to_string(n) + " a=" + clip(a.str(), 40),
                        witness);
}

Verdict verify_xy_power(int k) {
    if (k < 0) throw Error("xy power needs k >= 0");
    const NCPoly lhs = (NCPoly::x() * NCPoly::y()).pow(static_cast<unsigned>(k));
    const NCPoly rhs = NCPoly::monomial(static_cast<unsigned>(k), static_cast<unsigned>(k),
                                        Frac(q_power(static_cast<unsigned>(k * (k - 1) / 2))));
    std::optional<std::string> witness;
    if (auto diff = nc_first_difference(lhs, rhs)) {
        const auto& [key, l, r] = *diff;
        witness = "at x^" + std::to_string(key.first) + " y^" + std::to_string(key.second) + ": " +
                  clip(l.str()) + " vs " + clip(r.str());
    }
    return make_verdict("lemma41", "part=i k=" + std::to_string(k), witness);
}

Verdict verify_shifted_rising(int m, int n) {
    if (m < 0 || n < 0) throw Error("shifted rising needs m, n >= 0");
    const Frac t1 = Frac::var(Symbol::T(1));
    const Frac a = Frac::var(Symbol::A());
    // y^m ((t x + a) y)^n, normal ordered
    const NCPoly base = NCPoly::monomial(1, 1, t1) + NCPoly::monomial(0, 1, a);
    const NCPoly lhs = NCPoly::monomial(0, static_cast<unsigned>(m), Frac::one()) *
                       base.pow(static_cast<unsigned>(n));
    // (q^m t x + a)^{[n]} y^{m+n}
    const SparsePoly rising = q_rising(SparsePoly::var(Symbol::T(1)) * SparsePoly::var(Symbol::X()),
                                       SparsePoly::var(Symbol::A()), n, m);
    const NCPoly rhs = embed_x_poly(rising, static_cast<unsigned>(m + n));
    std::optional<std::string> witness;
    if (auto diff = nc_first_difference(lhs, rhs)) {
        const auto& [key, l, r] = *diff;
        witness = "at x^" + std::to_string(key.first) + " y^" + std::to_string(key.second) + ": " +
                  clip(l.str()) + " vs " + clip(r.str());
    }
    return make_verdict("lemma41", "part=ii m=" + std::to_string(m) + " n=" + std::to_string(n),
                        witness);
}

Verdict verify_cauchy_bm(int n, const Index& s) {
    const TVector t = symbolic_t(s.depth());
    const Frac lhs = cauchy_bm_lhs(n, s, t);
    const Frac rhs = cauchy_bm_rhs(n, s, t);
    auto witness = frac_difference(lhs, rhs);
    return make_verdict("cauchy-bm", param_ns(n, s), witness);
}

namespace {

// alternating sum of q-binomials against nested q-harmonic sums; rhs is 1/[n]^d
std::pair<FracSum, FracSum> bradley_sides(int n, int d) {
    const Index ones = Index::ones(d);
    const TVector t(static_cast<std::size_t>(d), Frac::one());
    FracSum lhs;
    for (int k = 1; k <= n; ++k) {
        FracSum lk = mpl_star_q_sum(k, ones, t);
        SparsePoly num = q_binomial(n, k) * q_power(static_cast<unsigned>(k * (k - 1) / 2)) * lk.num();
        if (k % 2 == 0) num = -num;
        lhs.add(num, lk.den());
    }
    FracSum rhs;
    DenProduct den;
    den.mul(q_int(n), d);
    rhs.add(SparsePoly::one(), den);
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace

Verdict verify_bradley(int n, int d) {
    if (n < 1 || d < 1) throw Error("bradley needs n, d >= 1");
    const Index ones = Index::ones(d);
    const TVector t(static_cast<std::size_t>(d), Frac::one());
    const auto [lhs, rhs] = bradley_sides(n, d);
    if (!fracsum_eq(lhs, rhs)) {
        return make_verdict("bradley", "n=" + std::to_string(n) + " d=" + std::to_string(d),
                            "lhs = " + clip(lhs.value().str()) + " vs 1/[n]^d");
    }
    // cross-check through the Cauchy-type tuple form at x = -1, a = 1
    const Frac rhs42 = cauchy_bm_rhs(n, ones, t);
    const Frac at_point = rhs42.subst({{Symbol::X(), Rational(-1)}, {Symbol::A(), Rational(1)}});
    std::optional<std::string> witness;
    if (!(-at_point == rhs.value()))
        witness = "tuple-form cross-check differs: " + clip((-at_point).str());
    return make_verdict("bradley", "n=" + std::to_string(n) + " d=" + std::to_string(d), witness);
}

// ---- seeded-point evaluation ------------------------------------------------

namespace {

std::optional<std::string> eval_diff(const Frac& l, const Frac& r,
                                     const std::map<Symbol, Rational>& at) {
    const Rational lv = l.eval(at);
    const Rational rv = r.eval(at);
    if (lv == rv) return std::nullopt;
    return ": " + lv.str() + " vs " + rv.str();
}

std::optional<std::string> eval_diff(const SparsePoly& l, const SparsePoly& r,
                                     const std::map<Symbol, Rational>& at) {
    const Rational lv = l.eval(at);
    const Rational rv = r.eval(at);
    if (lv == rv) return std::nullopt;
    return ": " + lv.str() + " vs " + rv.str();
}

// x and y stay formal keys; coefficients are evaluated
std::optional<std::string> eval_diff(const NCPoly& l, const NCPoly& r,
                                     const std::map<Symbol, Rational>& at) {
    std::map<NCPoly::Key, Rational> lv, rv;
    for (const auto& [key, c] : l.terms()) lv[key] = c.eval(at);
    for (const auto& [key, c] : r.terms()) rv[key] = c.eval(at);
    for (const auto& [key, v] : lv) {
        auto it = rv.find(key);
        const Rational other = it == rv.end() ? Rational(0) : it->second;
        if (v != other)
            return " at x^" + std::to_string(key.first) + " y^" + std::to_string(key.second) +
                   ": " + v.str() + " vs " + other.str();
    }
    for (const auto& [key, v] : rv) {
        if (!lv.contains(key) && !v.is_zero())
            return " at x^" + std::to_string(key.first) + " y^" + std::to_string(key.second) +
                   ": 0 vs " + v.str();
    }
    return std::nullopt;
}

template <class Sides>
Verdict eval_verdict(std::string suite, std::string params, const Sides& lhs, const Sides& rhs,
                     std::span<const EvalPoint> points) {
    Verdict v;
    v.suite = std::move(suite);
    v.params = std::move(params);
    v.mode = "eval";
    for (const EvalPoint& pt : points) {
        if (auto diff = eval_diff(lhs, rhs, pt.assignment())) {
            v.status = Verdict::Status::fail;
            v.witness = "point " + pt.str() + *diff;
            return v;
        }
    }
    return v;
}

}  // namespace

Verdict verify_schutzenberger_eval(int n, std::span<const EvalPoint> points) {
    const NCPoly lhs = (NCPoly::x() + NCPoly::y()).pow(static_cast<unsigned>(n));
    NCPoly rhs;
    for (int k = 0; k <= n; ++k)
        rhs.add_term(static_cast<unsigned>(k), static_cast<unsigned>(n - k), Frac(q_binomial(n, k)));
    return eval_verdict("schutzenberger", "n=" + std::to_string(n), lhs, rhs, points);
}

Verdict verify_lemma21_eval(int n, int k, int s_exp, std::span<const EvalPoint> points) {
    if (!(n >= k && k >= 1 && s_exp >= 1)) throw Error("lemma21 needs n >= k >= 1, s >= 1");
    const auto [lhs, rhs] = lemma21_sides(n, k, s_exp);
    return eval_verdict("lemma21", param_lemma21(n, k, s_exp), lhs.value(), rhs.value(), points);
}

Verdict verify_lemma22_eval(int n, const Index& s, std::span<const EvalPoint> points) {
    if (n < 1 || s.is_empty()) throw Error("lemma22 needs n >= 1 and a nonempty index");
    RecurrenceSides sides = lemma22_sides(n, s, symbolic_t(s.depth()));
    return eval_verdict("lemma22", param_ns(n, s) + " case=" + std::to_string(sides.case_id),
                        sides.lhs.freeze(), sides.rhs.freeze(), points);
}

Verdict verify_corollary_eval(int n, const Index& s, std::span<const EvalPoint> points) {
    const TVector t = symbolic_t(s.depth());
    return eval_verdict("corollary", param_ns(n, s) + " check=direct", bm_sum_1(n, s, t),
                        bm_tuple_form_1(n, s, t), points);
}

Verdict verify_ss1_eval(int n, const Index& s, std::span<const EvalPoint> points) {
    const TVector t = symbolic_t(s.depth());
    return eval_verdict("ss1", param_ns(n, s), ss_polylog_side(n, s, t, true),
                        ss_product_side(n, s, t, false), points);
}

Verdict verify_ss2_eval(int n, const Index& s, std::span<const EvalPoint> points) {
    const TVector t = symbolic_t(s.depth());
    return eval_verdict("ss2", param_ns(n, s), ss_polylog_side(n, s, t, false),
                        ss_product_side(n, s, t, true), points);
}

Verdict verify_cauchy_binomial_eval(int n, std::span<const EvalPoint> points) {
    const auto [lhs, rhs] = cauchy_binomial_sides(n, Frac::var(Symbol::A()));
    return eval_verdict("cauchy-binomial", "n=" + std::to_string(n) + " a=a", lhs, rhs, points);
}

Verdict verify_xy_power_eval(int k, std::span<const EvalPoint> points) {
    const NCPoly lhs = (NCPoly::x() * NCPoly::y()).pow(static_cast<unsigned>(k));
    const NCPoly rhs = NCPoly::monomial(static_cast<unsigned>(k), static_cast<unsigned>(k),
                                        Frac(q_power(static_cast<unsigned>(k * (k - 1) / 2))));
    return eval_verdict("lemma41", "part=i k=" + std::to_string(k), lhs, rhs, points);
}

Verdict verify_shifted_rising_eval(int m, int n, std::span<const EvalPoint> points) {
    const NCPoly base = NCPoly::monomial(1, 1, Frac::var(Symbol::T(1))) +
                        NCPoly::monomial(0, 1, Frac::var(Symbol::A()));
    const NCPoly lhs = NCPoly::monomial(0, static_cast<unsigned>(m), Frac::one()) *
                       base.pow(static_cast<unsigned>(n));
    const SparsePoly rising = q_rising(SparsePoly::var(Symbol::T(1)) * SparsePoly::var(Symbol::X()),
                                       SparsePoly::var(Symbol::A()), n, m);
    const NCPoly rhs = embed_x_poly(rising, static_cast<unsigned>(m + n));
    return eval_verdict("lemma41", "part=ii m=" + std::to_string(m) + " n=" + std::to_string(n),
                        lhs, rhs, points);
}

Verdict verify_cauchy_bm_eval(int n, const Index& s, std::span<const EvalPoint> points) {
    const TVector t = symbolic_t(s.depth());
    return eval_verdict("cauchy-bm", param_ns(n, s), cauchy_bm_lhs(n, s, t),
                        cauchy_bm_rhs(n, s, t), points);
}

Verdict verify_bradley_eval(int n, int d, std::span<const EvalPoint> points) {
    if (n < 1 || d < 1) throw Error("bradley needs n, d >= 1");
    const auto [lhs, rhs] = bradley_sides(n, d);
    return eval_verdict("bradley", "n=" + std::to_string(n) + " d=" + std::to_string(d),
                        lhs.value(), rhs.value(), points);
}

// ---- mutation sensitivity ----------------------------------------------------

namespace {

Verdict compare_mutated_nc(const std::string& suite, const NCPoly& lhs, NCPoly rhs,
                           std::uint64_t seed) {
    // one extra term at a seeded key with a seeded q-power coefficient
    const unsigned j = static_cast<unsigned>(seed % 3);
    const unsigned k = static_cast<unsigned>((seed >> 8) % 3);
    rhs.add_term(j, k, Frac(q_power(static_cast<unsigned>((seed >> 16) % 4))));
    std::optional<std::string> witness;
    if (auto diff = nc_first_difference(lhs, rhs)) {
        const auto& [key, l, r] = *diff;
        witness = "at x^" + std::to_string(key.first) + " y^" + std::to_string(key.second) + ": " +
                  clip(l.str()) + " vs " + clip(r.str());
    }
    return make_verdict(suite, "mutated seed=" + std::to_string(seed), witness);
}

Verdict compare_mutated_frac(const std::string& suite, const Frac& lhs, const Frac& rhs,
                             std::uint64_t seed) {
    const Frac mutated = rhs + Frac(q_power(static_cast<unsigned>(seed % 5)));
    auto witness = frac_difference(lhs, mutated);
    return make_verdict(suite, "mutated seed=" + std::to_string(seed), witness);
}

Verdict compare_mutated_poly(const std::string& suite, const SparsePoly& lhs, SparsePoly rhs,
                             std::uint64_t seed) {
    const Monomial m = Monomial::var(Symbol::T(1), static_cast<unsigned>(seed % 4));
    rhs.add_term(m, Rational(1, 1 + static_cast<long>(seed % 6)));
    auto witness = poly_first_difference(lhs, rhs);
    return make_verdict(suite, "mutated seed=" + std::to_string(seed), witness);
}

Verdict compare_mutated_rational(const std::string& suite, const Rational& lhs, const Rational& rhs,
                                 std::uint64_t seed) {
    const Rational mutated = rhs + Rational(1, 1 + static_cast<long>(seed % 9));
    std::optional<std::string> witness;
    if (lhs != mutated) witness = "lhs = " + lhs.str() + " vs rhs = " + mutated.str();
    return make_verdict(suite, "mutated seed=" + std::to_string(seed), witness);
}

}  // namespace

Verdict verify_mutated(const std::string& suite_id, std::uint64_t seed) {
    const Index s21({2, 1});
    const Index s1({1});
    if (suite_id == "schutzenberger") {
        NCPoly rhs;
        for (int k = 0; k <= 3; ++k)
            rhs.add_term(static_cast<unsigned>(k), static_cast<unsigned>(3 - k),
                         Frac(q_binomial(3, k)));
        return compare_mutated_nc(suite_id, (NCPoly::x() + NCPoly::y()).pow(3), rhs, seed);
    }
    if (suite_id == "lemma21") {
        const auto [lhs, rhs] = lemma21_sides(4, 2, 2);
        return compare_mutated_frac(suite_id, lhs.value(), rhs.value(), seed);
    }
    if (suite_id == "lemma22") {
        RecurrenceSides sides = lemma22_sides(3, s21, symbolic_t(2));
        return compare_mutated_nc(suite_id, sides.lhs.freeze(), sides.rhs.freeze(), seed);
    }
    if (suite_id == "main-theorem") {
        const TVector t = symbolic_t(2);
        return compare_mutated_nc(suite_id, bm_sum_q(3, s21, t), bm_tuple_form_q(3, s21, t), seed);
    }
    if (suite_id == "corollary") {
        const TVector t = symbolic_t(2);
        return compare_mutated_poly(suite_id, bm_sum_1(3, s21, t), bm_tuple_form_1(3, s21, t), seed);
    }
    if (suite_id == "gencev") {
        // both sides of the n=2, s=(1) instance, rhs shifted
        const Rational a(1, 2), p(1, 3);
        Rational lhs(0);
        for (int k = 1; k <= 2; ++k)
            lhs += binomial(2, k) * p.pow(k) * (Rational(1) - p).pow(2 - k) *
                   zeta_star_k(k, s1, Frac(SparsePoly(a))).eval({});
        return compare_mutated_rational(suite_id, lhs, lhs, seed);
    }
    if (suite_id == "mneimneh") {
        Rational lhs(0);
        const Rational p(2, 5);
        for (int k = 1; k <= 4; ++k)
            lhs += harmonic(k) * binomial(4, k) * p.pow(k) * (Rational(1) - p).pow(4 - k);
        return compare_mutated_rational(suite_id, lhs, lhs, seed);
    }
    if (suite_id == "boyadzhiev") {
        Rational lhs(0);
        for (int k = 1; k <= 3; ++k) lhs += binomial(3, k) * harmonic(k);
        return compare_mutated_rational(suite_id, lhs, lhs, seed);
    }
    if (suite_id == "ss1") {
        const TVector t = symbolic_t(2);
        return compare_mutated_poly(suite_id, ss_polylog_side(3, s21, t, true),
                                    ss_product_side(3, s21, t, false), seed);
    }
    if (suite_id == "ss2") {
        const TVector t = symbolic_t(2);
        return compare_mutated_poly(suite_id, ss_polylog_side(3, s21, t, false),
                                    ss_product_side(3, s21, t, true), seed);
    }
    if (suite_id == "inversion") {
        std::vector<Frac> seq;
        for (int i = 0; i < 5; ++i) seq.push_back(Frac(SparsePoly(Rational(i * i - 3, 2))));
        std::vector<Frac> fwd = binomial_inversion(seq, InversionDirection::forward);
        fwd[seed % fwd.size()] += Frac::one();
        const std::vector<Frac> back = binomial_inversion(fwd, InversionDirection::backward);
        std::optional<std::string> witness;
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (!(back[i] == seq[i])) {
                witness = "roundtrip differs at position " + std::to_string(i);
                break;
            }
        return make_verdict(suite_id, "mutated seed=" + std::to_string(seed), witness);
    }
    if (suite_id == "cauchy-binomial") {
        const auto [lhs, rhs] = cauchy_binomial_sides(4, Frac::var(Symbol::A()));
        return compare_mutated_frac(suite_id, lhs, rhs, seed);
    }
    if (suite_id == "lemma41") {
        const NCPoly lhs = (NCPoly::x() * NCPoly::y()).pow(3);
        const NCPoly rhs = NCPoly::monomial(3, 3, Frac(q_power(3)));
        return compare_mutated_nc(suite_id, lhs, rhs, seed);
    }
    if (suite_id == "cauchy-bm") {
        const TVector t = symbolic_t(2);
        return compare_mutated_frac(suite_id, cauchy_bm_lhs(2, s21, t), cauchy_bm_rhs(2, s21, t),
                                    seed);
    }
    if (suite_id == "bradley") {
        const auto [lhs, rhs] = bradley_sides(4, 2);
        return compare_mutated_frac(suite_id, lhs.value(), rhs.value(), seed);
    }
    throw UsageError("unknown suite: " + suite_id);
}

}  // namespace qmpl
