#pragma once

#include <vector>

#include "padicvoa/fock.hpp"
#include "padicvoa/qseries.hpp"

namespace padicvoa {

/// Tr_{S^(n)} o(v), accumulated from the diagonal coefficient of o(v)
/// applied to each basis monomial of grade n.
Rational graded_trace(const HeisenbergState& v, int n);

/// Matrix of o(v) on grade_basis(n): entry [i][j] is the coefficient of
/// basis[i] in o(v) basis[j].
std::vector<std::vector<Rational>> zero_mode_matrix(const HeisenbergState& v, int n);

/// Z(v, q) = q^(-1/24) sum_{n <= n_max} Tr_{S^(n)} o(v) q^n.
QSeries character(const HeisenbergState& v, int n_max);

/// f(v) = eta * Z(v, q), an honest power series in q.
QSeries normalized_character(const HeisenbergState& v, int n_max);

}  // namespace padicvoa
