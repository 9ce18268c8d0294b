#pragma once

#include "qmpl/denprod.hpp"
#include "qmpl/index.hpp"

namespace qmpl {

/// Finite q-multi-polylogarithm of star type:
///   l_k(s,t) = sum over k >= n1 >= ... >= nd >= 1 of
///              t1^{n1-n2} ... t_{d-1}^{n_{d-1}-n_d} t_d^{n_d}
///              / ([n1]^{s1} ... [nd]^{sd}).
/// The empty index gives 1. t entries may be arbitrary fractions.
Frac mpl_star_q(int k, const Index& s, const TVector& t);

/// Same sum with factored denominator, for callers that keep accumulating.
FracSum mpl_star_q_sum(int k, const Index& s, const TVector& t);

/// The q = 1 value: ordinary integers in the denominators.
Frac mpl_star_q1(int k, const Index& s, const TVector& t);

/// zeta-star truncation: sum over k >= n1 >= ... >= nd >= 1 of
/// a^{nd} / (n1^{s1} ... nd^{sd}); equals mpl_star_q1 at t = (1,...,1,a).
Frac zeta_star_k(int k, const Index& s, const Frac& a);

/// k-th harmonic number, exactly; H_0 = 0.
Rational harmonic(int k);

}  // namespace qmpl
