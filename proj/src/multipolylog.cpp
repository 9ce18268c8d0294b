#include "qmpl/multipolylog.hpp"

#include "qmpl/qcore.hpp"

namespace qmpl {

FracSum mpl_star_q_sum(int k, const Index& s, const TVector& t) {
    if (k < 1) throw Error("mpl_star_q needs k >= 1");
    FracSum sum;
    if (s.is_empty()) {
        sum.add(SparsePoly::one());
        return sum;
    }
    const int d = s.depth();
    if (static_cast<int>(t.size()) != d) throw Error("t vector length must equal depth");
    for (WeaklyDecreasingTuples tuples(k, d); tuples.get(); tuples.advance()) {
        const std::vector<int>& n = *tuples.get();
        // term: prod t_i^{e_i} / prod [n_i]^{s_i}, with the telescoped
        // exponents e_i = n_i - n_{i+1} (e_d = n_d); t denominators join the
        // factored denominator so the running sum keeps a shared one
        SparsePoly num = SparsePoly::one();
        DenProduct den;
        for (int i = 0; i < d; ++i) {
            const int e = (i + 1 < d) ? n[static_cast<std::size_t>(i)] - n[static_cast<std::size_t>(i + 1)]
                                      : n[static_cast<std::size_t>(i)];
            if (e > 0) num *= t[static_cast<std::size_t>(i)].num().pow(static_cast<unsigned>(e));
            const SparsePoly& tden = t[static_cast<std::size_t>(i)].den();
            if (!tden.is_one()) den.mul(tden, e);
            den.mul(q_int(n[static_cast<std::size_t>(i)]), s.part(i + 1));
        }
        sum.add(num, den);
    }
    return sum;
}

Frac mpl_star_q(int k, const Index& s, const TVector& t) {
    return mpl_star_q_sum(k, s, t).value();
}

Frac mpl_star_q1(int k, const Index& s, const TVector& t) {
    if (k < 1) throw Error("mpl_star_q1 needs k >= 1");
    if (s.is_empty()) return Frac::one();
    const int d = s.depth();
    if (static_cast<int>(t.size()) != d) throw Error("t vector length must equal depth");
    FracSum sum;
    for (WeaklyDecreasingTuples tuples(k, d); tuples.get(); tuples.advance()) {
        const std::vector<int>& n = *tuples.get();
        Rational c(1);
        SparsePoly num = SparsePoly::one();
        DenProduct den;
        for (int i = 0; i < d; ++i) {
            const int e = (i + 1 < d) ? n[static_cast<std::size_t>(i)] - n[static_cast<std::size_t>(i + 1)]
                                      : n[static_cast<std::size_t>(i)];
            if (e > 0) num *= t[static_cast<std::size_t>(i)].num().pow(static_cast<unsigned>(e));
            const SparsePoly& tden = t[static_cast<std::size_t>(i)].den();
            if (!tden.is_one()) den.mul(tden, e);
            c /= Rational(n[static_cast<std::size_t>(i)]).pow(s.part(i + 1));
        }
        sum.add(num * c, den);
    }
    return sum.value();
}

Frac zeta_star_k(int k, const Index& s, const Frac& a) {
    return mpl_star_q1(k, s, ones_then(s.depth(), a));
}

Rational harmonic(int k) {
    if (k < 0) throw Error("harmonic of negative k");
    Rational h(0);
    for (int i = 1; i <= k; ++i) h += Rational(1, i);
    return h;
}

}  // namespace qmpl
