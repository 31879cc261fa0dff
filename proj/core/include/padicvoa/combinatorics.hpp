#pragma once

#include "padicvoa/rational.hpp"

namespace padicvoa {

/// Binomial C(t, i) for any integer t and i >= 0:
/// t(t-1)...(t-i+1)/i!. For negative t this is (-1)^i C(-t+i-1, i).
Integer gen_binomial(long t, long i);

/// Bernoulli number B_k with the z/(e^z - 1) convention (B_1 = -1/2).
/// Computed from sum_{j<=k} C(k+1, j) B_j = 0 and memoized; safe to call
/// from several threads.
Rational bernoulli(long k);

/// Stirling number of the second kind S(n, k).
Integer stirling2(long n, long k);

/// c(r, m) = sum_{j=0}^{m} (-1)^{m+j} C(m, j) (j+1)^{r-1}, evaluated as the
/// alternating sum. Equals m! S(r, m+1); zero once m >= r.
Integer c_coefficient(long r, long m);

Integer factorial(long n);

/// Sum of d^power over the divisors d of n.
Integer divisor_sigma(long n, unsigned long power);

}  // namespace padicvoa
