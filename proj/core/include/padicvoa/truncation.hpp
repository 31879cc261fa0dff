#pragma once

#include <algorithm>
#include <initializer_list>

#include "padicvoa/combinatorics.hpp"

// Index bookkeeping for the finite sums in the associator, commutator and
// Jacobi identities on graded algebraic states.
namespace padicvoa::truncation {

/// (-1)^i C(t, i).
inline Rational signed_binomial(long t, long i) {
  Integer b = gen_binomial(t, i);
  if (i % 2 != 0) b = -b;
  return Rational(b);
}

/// Last summation index i to visit in sum_i C(t, i)-weighted terms, given for
/// each summand the first index from which it vanishes. C(t, i) = 0 for
/// i > t >= 0 caps the range as well. Returns -1 for an empty range.
inline int last_index(long t, std::initializer_list<int> vanish_from) {
  int last = -1;
  for (int v : vanish_from) last = std::max(last, v - 1);
  if (t >= 0) last = std::min<long>(last, t);
  return last;
}

}  // namespace padicvoa::truncation
