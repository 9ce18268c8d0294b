#include <random>

#include "qmpl/evalpoint.hpp"
#include "qmpl/identities.hpp"

namespace qmpl {

std::map<Symbol, Rational> EvalPoint::assignment() const {
    std::map<Symbol, Rational> out{{Symbol::Q(), q}, {Symbol::X(), x}, {Symbol::Y(), y}, {Symbol::A(), a}};
    for (std::size_t i = 0; i < t.size(); ++i) out[Symbol::T(static_cast<int>(i) + 1)] = t[i];
    return out;
}

std::string EvalPoint::str() const {
    std::string s = "q=" + q.str();
    if (!t.empty()) {
        s += " t=(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += t[i].str();
        }
        s += ")";
    }
    s += " x=" + x.str() + " y=" + y.str() + " a=" + a.str();
    return s;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t ordinal) {
    // splitmix64 step over seed xor ordinal
    std::uint64_t z = seed ^ (ordinal + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<EvalPoint> draw_points(int count, int depth, std::uint64_t seed,
                                   std::span<const Rational> q_pool,
                                   std::span<const Rational> t_pool) {
    if (q_pool.empty() || t_pool.empty()) throw UsageError("evaluation pools must be nonempty");
    std::mt19937_64 rng(seed);
    auto pick = [&](std::span<const Rational> pool) {
        return pool[static_cast<std::size_t>(rng() % pool.size())];
    };
    std::vector<EvalPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        EvalPoint p;
        p.q = pick(q_pool);
        for (int j = 0; j < depth; ++j) p.t.push_back(pick(t_pool));
        p.x = pick(t_pool);
        p.y = pick(t_pool);
        p.a = pick(t_pool);
        out.push_back(std::move(p));
    }
    return out;
}

// ---- dense numeric path for the main theorem -------------------------------
//
// Coefficient vectors of homogeneous elements: index j holds the coefficient
// of x^j y^{deg-j}, deg = size-1. Multiplication follows the normal-ordering
// twist q^{(deg_f - j) i}.

namespace {

using Homog = std::vector<Rational>;

Homog hmul(const Homog& f, const Homog& g, const std::vector<Rational>& qpow) {
    const std::size_t p = f.size() - 1;
    Homog r(f.size() + g.size() - 1, Rational(0));
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j].is_zero()) continue;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i].is_zero()) continue;
            r[j + i] += f[j] * g[i] * qpow[(p - j) * i];
        }
    }
    return r;
}

// f * y^e: x-degrees unchanged, total degree grows
Homog rmul_ypow(Homog f, int e) {
    f.resize(f.size() + static_cast<std::size_t>(e), Rational(0));
    return f;
}

std::vector<Homog> power_table(const Homog& base, int upto, const std::vector<Rational>& qpow) {
    std::vector<Homog> t{Homog{Rational(1)}};
    for (int e = 1; e <= upto; ++e) t.push_back(hmul(t.back(), base, qpow));
    return t;
}

Rational l_star_value(int k, const Index& s, const EvalPoint& pt,
                      const std::vector<Rational>& qint_val) {
    const int d = s.depth();
    Rational total(0);
    for (WeaklyDecreasingTuples tuples(k, d); tuples.get(); tuples.advance()) {
        const std::vector<int>& n = *tuples.get();
        Rational v(1);
        for (int i = 0; i < d; ++i) {
            const int e = (i + 1 < d) ? n[static_cast<std::size_t>(i)] - n[static_cast<std::size_t>(i + 1)]
                                      : n[static_cast<std::size_t>(i)];
            if (e > 0) v *= pt.t[static_cast<std::size_t>(i)].pow(e);
            v /= qint_val[static_cast<std::size_t>(n[static_cast<std::size_t>(i)])].pow(s.part(i + 1));
        }
        total += v;
    }
    return total;
}

}  // namespace

Verdict verify_main_theorem_eval(int n, const Index& s, std::span<const EvalPoint> points) {
    if (n < 1 || s.is_empty()) throw Error("main theorem needs n >= 1 and a nonempty index");
    Verdict v;
    v.suite = "main-theorem";
    v.params = "n=" + std::to_string(n) + " s=" + s.str();
    v.mode = "eval";
    const int d = s.depth();
    const int w = s.weight();
    for (const EvalPoint& pt : points) {
        // tables for this point
        std::vector<Rational> qpow{Rational(1)};
        for (int e = 1; e <= n * n; ++e) qpow.push_back(qpow.back() * pt.q);
        std::vector<Rational> qint_val{Rational(0)};
        for (int i = 1; i <= n; ++i) {
            Rational acc(0);
            for (int e = 0; e < i; ++e) acc += qpow[static_cast<std::size_t>(e)];
            qint_val.push_back(acc);
        }
        const auto xy_pows = power_table(Homog{Rational(1), Rational(1)}, n, qpow);
        std::vector<std::vector<Homog>> t_pows;
        for (int r = 1; r <= d; ++r)
            t_pows.push_back(power_table(Homog{Rational(1), pt.t[static_cast<std::size_t>(r - 1)]}, n, qpow));

        Homog lhs(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int k = 1; k <= n; ++k) {
            lhs[static_cast<std::size_t>(k)] =
                q_binomial(n, k).eval({{Symbol::Q(), pt.q}}) * l_star_value(k, s, pt, qint_val);
        }

        Homog rhs(static_cast<std::size_t>(n) + 1, Rational(0));
        for (WeaklyDecreasingTuples tuples(n, w); tuples.get(); tuples.advance()) {
            const std::vector<int>& tup = *tuples.get();
            auto nn = [&](int i) { return tup[static_cast<std::size_t>(i - 1)]; };
            Homog prod = xy_pows[static_cast<std::size_t>(n - nn(1))];
            int ypend = 0;
            for (int r = 1; r < d; ++r) {
                ypend += nn(s.partial(r - 1) + 1) - nn(s.partial(r));
                const int e = nn(s.partial(r)) - nn(s.partial(r) + 1);
                if (e > 0) {
                    if (ypend > 0) prod = rmul_ypow(std::move(prod), ypend);
                    ypend = 0;
                    prod = hmul(prod, t_pows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(e)], qpow);
                }
            }
            ypend += nn(s.partial(d - 1) + 1) - nn(s.partial(d));
            if (ypend > 0) prod = rmul_ypow(std::move(prod), ypend);
            const int last = nn(s.partial(d));
            Homog bracket = t_pows[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(last)];
            bracket[0] -= Rational(1);
            prod = hmul(prod, bracket, qpow);
            Rational scale(1);
            for (int i = 1; i <= w; ++i) scale /= qint_val[static_cast<std::size_t>(nn(i))];
            for (std::size_t j = 0; j < prod.size(); ++j)
                if (!prod[j].is_zero()) rhs[j] += prod[j] * scale;
        }

        for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
            if (lhs[j] != rhs[j]) {
                v.status = Verdict::Status::fail;
                v.witness = "point " + pt.str() + ": at x^" + std::to_string(j) + " y^" +
                            std::to_string(static_cast<std::size_t>(n) - j) + ": " + lhs[j].str() +
                            " vs " + rhs[j].str();
                return v;
            }
        }
    }
    return v;
}

}  // namespace qmpl
