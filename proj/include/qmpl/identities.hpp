#pragma once

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "qmpl/evalpoint.hpp"
#include "qmpl/multipolylog.hpp"
#include "qmpl/ncpoly.hpp"
#include "qmpl/qcore.hpp"

namespace qmpl {

/// Outcome of one identity check. Failed checks always carry a witness
/// (first differing term or evaluation point); errors carry the message.
struct Verdict {
    enum class Status { pass, fail, error };

    std::string suite;
    std::string params;
    std::string mode = "exact";
    Status status = Status::pass;
    std::string witness;
    std::chrono::microseconds elapsed{0};

    bool passed() const { return status == Status::pass; }
};

// ---- builders -------------------------------------------------------------

/// Binomial sum of finite q-multi-polylogarithms:
///   sum_{k=1}^{n} [n choose k]_q (xscale x)^k y^{n-k} l_k(s,t)
/// as a normal form in R_q[x,y]. n = 0 gives 0; the empty index gives
/// (x+y)^n - y^n.
NCPoly bm_sum_q(int n, const Index& s, const TVector& t, const Frac& xscale = Frac::one());

/// The closed tuple form of the same element: the weight-fold sum over
/// n >= n1 >= ... >= nw >= 1 of ordered products
///   (x+y)^{n-n1} / ([n1]...[nw])
///   * prod_{r<d} y^{n_{l(r-1)+1}-n_{l(r)}} (t_r x + y)^{n_{l(r)}-n_{l(r)+1}}
///   * y^{n_{l(d-1)+1}-n_{l(d)}} ((t_d x + y)^{n_{l(d)}} - y^{n_{l(d)}}).
NCPoly bm_tuple_form_q(int n, const Index& s, const TVector& t);

/// q = 1 (commutative) binomial sum, as a polynomial in x, y and the t
/// symbols with rational coefficients. Requires denominator-free t entries.
SparsePoly bm_sum_1(int n, const Index& s, const TVector& t);

/// q = 1 closed tuple form with y exponent
/// n1 + n_{l(1)+1} + ... + n_{l(d-1)+1} - n_{l(1)} - ... - n_{l(d)}.
SparsePoly bm_tuple_form_1(int n, const Index& s, const TVector& t);

/// Cauchy-type binomial sum and its closed tuple form, as fractions whose
/// numerators carry x and a as ordinary symbols:
///   lhs = sum_k [n choose k]_q q^{C(k,2)} x^k a^{n-k} l_k(s,t)
///   rhs = tuple sum of shifted rising products (q^{n-n_l(r)} t_r x + a)^[..].
Frac cauchy_bm_lhs(int n, const Index& s, const TVector& t);
Frac cauchy_bm_rhs(int n, const Index& s, const TVector& t);

/// The two sides of the Sakugawa-Seki identities (q = 1, symbolic t).
/// polylog side: sum over depth-tuples of the t-monomial over n_i^{s_i},
/// with an alternating (-1)^{n1} C(n,n1) factor when requested.
SparsePoly ss_polylog_side(int n, const Index& s, const TVector& t, bool alternating);
/// product side: sum over weight-tuples of (1-t_r)-powers and the final
/// ((1-t_d)^{n_l(d)} - 1) bracket over n1...nw, optionally alternating.
SparsePoly ss_product_side(int n, const Index& s, const TVector& t, bool alternating);

enum class InversionDirection { forward, backward };

/// b_n = sum_k C(n,k) a_k  <->  a_n = sum_k C(n,k) (-1)^{n-k} b_k.
std::vector<Frac> binomial_inversion(std::span<const Frac> seq, InversionDirection dir);

// ---- verifiers ------------------------------------------------------------

Verdict verify_schutzenberger(int n);
Verdict verify_lemma21(int n, int k, int s_exp);
Verdict verify_lemma22(int n, const Index& s);
Verdict verify_main_theorem(int n, const Index& s);
Verdict verify_corollary_limit(int n, const Index& s);
Verdict verify_corollary_direct(int n, const Index& s);
Verdict verify_gencev(int n, const Index& s, const Rational& a, const Rational& p);
Verdict verify_mneimneh(int n, const Rational& p);
Verdict verify_boyadzhiev(int n, const Rational& lambda, const Rational& mu);
Verdict verify_ss1(int n, const Index& s);
Verdict verify_ss2(int n, const Index& s);
Verdict verify_euler(int n);
/// Executable form of the inversion argument connecting the commutative
/// binomial sums with the Sakugawa-Seki identities: forward-transforms
/// a_k = (-1)^k l_k(s,t) and matches the pinned-first-entry product sums,
/// then checks the backward transform restores a.
Verdict verify_ss_inversion_link(int n, const Index& s);
Verdict verify_inversion_roundtrip(std::span<const Frac> seq, const std::string& label);
Verdict verify_cauchy_binomial(int n, const Frac& a);
Verdict verify_xy_power(int k);
Verdict verify_shifted_rising(int m, int n);
Verdict verify_cauchy_bm(int n, const Index& s);
Verdict verify_bradley(int n, int d);

// ---- seeded-point evaluation variants ---------------------------------------
// Sound smoke checks: a polynomial identity that holds exactly also holds at
// every admissible rational point, so these can only fail when the exact
// check would.

Verdict verify_schutzenberger_eval(int n, std::span<const EvalPoint> points);
Verdict verify_lemma21_eval(int n, int k, int s_exp, std::span<const EvalPoint> points);
Verdict verify_lemma22_eval(int n, const Index& s, std::span<const EvalPoint> points);
/// Dense numeric path; never builds the symbolic sides.
Verdict verify_main_theorem_eval(int n, const Index& s, std::span<const EvalPoint> points);
Verdict verify_corollary_eval(int n, const Index& s, std::span<const EvalPoint> points);
Verdict verify_ss1_eval(int n, const Index& s, std::span<const EvalPoint> points);
Verdict verify_ss2_eval(int n, const Index& s, std::span<const EvalPoint> points);
Verdict verify_cauchy_binomial_eval(int n, std::span<const EvalPoint> points);
Verdict verify_xy_power_eval(int k, std::span<const EvalPoint> points);
Verdict verify_shifted_rising_eval(int m, int n, std::span<const EvalPoint> points);
Verdict verify_cauchy_bm_eval(int n, const Index& s, std::span<const EvalPoint> points);
Verdict verify_bradley_eval(int n, int d, std::span<const EvalPoint> points);

/// Rebuilds the named identity at a small fixed instance, injects one seeded
/// extra term into the right side, and reruns the comparison. A healthy
/// comparator returns a fail verdict with a witness; a pass means the
/// comparison is vacuous.
Verdict verify_mutated(const std::string& suite_id, std::uint64_t seed);

/// Caps long witness payloads for reports.
std::string clip(const std::string& s, std::size_t max = 240);

}  // namespace qmpl
