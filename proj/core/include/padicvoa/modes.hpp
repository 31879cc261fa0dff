#pragma once

#include <cstddef>
#include <map>

#include "padicvoa/fock.hpp"

namespace padicvoa {

/// The Heisenberg generator h_m on the Fock space: multiplication by
/// h(m) for m < 0, m * d/dh(-m) for m > 0, and zero for m = 0.
HeisenbergState h_mode(int m, const HeisenbergState& b);

/// v(n)b, the n-th mode of the vertex operator Y(v, z) applied to b.
///
/// Each monomial of v is written h(-k)u with k its largest part, and the
/// associator formula
///
///   (h(-k)u)(n)b = sum_{i>=0} (-1)^i C(-k, i) [ h(-k-i) u(n+i) b
///                                               - (-1)^k u(n-k-i) h(i) b ]
///
/// reduces it to modes of the shorter monomial u. Both sums stop at the
/// grading bounds: u(j)b = 0 once j >= wt(u) + wt(b), and h(i)b = 0 once
/// i > wt(b). Results on monomial pairs are memoized in a process-wide,
/// thread-safe cache.
HeisenbergState mode_action(const HeisenbergState& v, int n, const HeisenbergState& b);

/// Virasoro mode L_n = 1/2 sum_j :h_j h_{n-j}: (central charge 1).
HeisenbergState virasoro_mode(int n, const HeisenbergState& b);

/// o(v) = v(wt v - 1), extended linearly over homogeneous components.
class ZeroMode {
 public:
  explicit ZeroMode(const HeisenbergState& v);
  HeisenbergState operator()(const HeisenbergState& b) const;

 private:
  std::map<int, HeisenbergState> components_;
};

inline ZeroMode zero_mode(const HeisenbergState& v) { return ZeroMode(v); }

/// n-th mode of the t-th residue product a(z)_t b(z), applied to w:
///   sum_i (-1)^i C(t, i) { a(t-i) b(n+i) w - (-1)^t b(t+n-i) a(i) w }.
HeisenbergState residue_product_mode(const HeisenbergState& a, const HeisenbergState& b, int t, int n,
                                     const HeisenbergState& w);

/// Canonical derivation T(a) = a(-2)|0>.
HeisenbergState translation(const HeisenbergState& a);

/// Memo-cache housekeeping; clearing never changes results.
void clear_mode_cache();
std::size_t mode_cache_size();

}  // namespace padicvoa
