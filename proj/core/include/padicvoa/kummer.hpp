#pragma once

#include <vector>

#include "padicvoa/axioms.hpp"
#include "padicvoa/fock.hpp"
#include "padicvoa/qseries.hpp"

namespace padicvoa {

/// (r-1)! h[-r]h[-1]|0> in the round-bracket basis:
///   sum_{m<r} c(r, m) h(-m-1)h(-1)|0> - B_{r+1}/(r+1) |0>.
/// r must be odd and positive.
HeisenbergState square_bracket_state(long r);

/// v_r = 1/2 (r-1)! h[-r]h[-1]|0>; its normalized character is G_{r+1}.
HeisenbergState v_state(long r);

/// u_r = 2 (1 - p^r) v_r. The rational state is assembled exactly before
/// any p-adic reduction.
HeisenbergState u_state(long r, long p);

/// r = 1 + p^a (p-1).
long kummer_index(long p, long a);

struct KummerFamily {
  long prime;
  long depth;
  std::vector<HeisenbergState> states;  // u_{1+p^a(p-1)} for a = 0..depth
};

KummerFamily kummer_family(long p, long a_max);

/// Defect u_{1+p^a(p-1)} - u_{1+p^b(p-1)} for a <= b. The congruence
/// contract is sup_norm_exponent(defect) <= -(a+1); see
/// `bound` and `satisfied()` on the report.
struct KummerReport {
  DefectReport<HeisenbergState> report;
  long bound;
  bool satisfied() const { return report.norm_exponent <= NormExponent(bound); }
};

KummerReport kummer_check(long p, long a, long b);

/// max_n -v_p of [q^n](f(u_{1+p^a(p-1)}) - 2 G2*) over n <= n_max.
NormExponent limit_character_check(long p, long a, int n_max);

}  // namespace padicvoa
