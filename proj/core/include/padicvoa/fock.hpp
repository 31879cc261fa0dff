#pragma once

#include <string>
#include <vector>

#include "padicvoa/state.hpp"

namespace padicvoa {

struct HeisenbergTag {};

/// Element of the rank-1 Heisenberg Fock space Q[h(-1), h(-2), ...]; the
/// partition I stands for the monomial h^I |0>.
using HeisenbergState = LinearCombination<HeisenbergTag>;

/// Basis of the weight-n piece S^(n): the partitions of n.
std::vector<Partition> grade_basis(int n);

/// All basis monomials of weight <= max_grade, by grade.
std::vector<HeisenbergState> basis_states_up_to(int max_grade);

inline HeisenbergState state_add(const HeisenbergState& a, const HeisenbergState& b) { return a + b; }
inline HeisenbergState state_scale(const Rational& s, const HeisenbergState& a) { return s * a; }
inline int state_weight(const HeisenbergState& a) { return a.weight(); }
inline bool is_homogeneous(const HeisenbergState& a) { return a.is_homogeneous(); }

/// Single monomial h(-parts[0]) h(-parts[1]) ... |0>.
inline HeisenbergState h_monomial(std::initializer_list<int> parts, const Rational& coeff = Rational(1)) {
  return HeisenbergState::monomial(Partition(parts), coeff);
}

/// Canonical text: `h(-2)^2 h(-1) |0>`, terms joined with " + " / " - ",
/// coefficient 1 omitted. The zero state renders as "0".
std::string to_string(const HeisenbergState& state);
std::string monomial_to_string(const Partition& monomial);

namespace detail {
std::string render_terms(const std::map<Partition, Rational>& terms, char generator);
}  // namespace detail

}  // namespace padicvoa
