#pragma once

#include "qmpl/frac.hpp"
#include "qmpl/poly.hpp"

namespace qmpl {

/// q-integer [n] = 1 + q + ... + q^{n-1}; [0] = 0. Evaluates to n at q = 1.
const SparsePoly& q_int(int n);

/// q-factorial [n]! = [n][n-1]...[1]; [0]! = 1.
const SparsePoly& q_factorial(int n);

/// Gaussian binomial coefficient as a polynomial in q, computed by the
/// recurrence [n choose k] = q^k [n-1 choose k] + [n-1 choose k-1], which is
/// polynomial by construction. Returns 0 when k < 0 or k > n.
const SparsePoly& q_binomial(int n, int k);

/// q-shifted product prod_{k=1}^{n} (q^{m+k-1} A + B); n = 0 gives 1.
SparsePoly q_rising(const SparsePoly& A, const SparsePoly& B, int n, int m = 0);

/// Ordinary binomial coefficient as an exact rational (0 outside 0<=k<=n).
Rational binomial(int n, int k);

/// q raised to a nonnegative power, as a polynomial.
SparsePoly q_power(unsigned e);

}  // namespace qmpl
