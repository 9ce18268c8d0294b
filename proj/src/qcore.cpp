#include "qmpl/qcore.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qmpl {

const SparsePoly& q_int(int n) {
    if (n < 0) throw Error("q_int of negative n");
    thread_local std::vector<SparsePoly> memo;
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        SparsePoly p;
        for (int i = 0; i < m; ++i) p.add_term(Monomial::var(Symbol::Q(), static_cast<unsigned>(i)), Rational(1));
        memo.push_back(std::move(p));
    }
    return memo[static_cast<std::size_t>(n)];
}

const SparsePoly& q_factorial(int n) {
    if (n < 0) throw Error("q_factorial of negative n");
    thread_local std::vector<SparsePoly> memo{SparsePoly::one()};
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        memo.push_back(memo.back() * q_int(m));
    }
    return memo[static_cast<std::size_t>(n)];
}

const SparsePoly& q_binomial(int n, int k) {
    if (n < 0) throw Error("q_binomial of negative n");
    static const SparsePoly kZero;
    if (k < 0 || k > n) return kZero;
    thread_local std::map<std::pair<int, int>, SparsePoly> memo;
    auto found = memo.find({n, k});
    if (found != memo.end()) return found->second;
    SparsePoly result;
    if (k == 0 || k == n) {
        result = SparsePoly::one();
    } else {
        result = SparsePoly::var(Symbol::Q(), static_cast<unsigned>(k)) * q_binomial(n - 1, k) +
                 q_binomial(n - 1, k - 1);
    }
    return memo.emplace(std::make_pair(n, k), std::move(result)).first->second;
}

SparsePoly q_rising(const SparsePoly& A, const SparsePoly& B, int n, int m) {
    if (n < 0 || m < 0) throw Error("q_rising with negative bound");
    SparsePoly acc = SparsePoly::one();
    for (int k = 1; k <= n; ++k)
        acc *= q_power(static_cast<unsigned>(m + k - 1)) * A + B;
    return acc;
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    k = std::min(k, n - k);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

SparsePoly q_power(unsigned e) {
    return SparsePoly::var(Symbol::Q(), e);
}

}  // namespace qmpl
