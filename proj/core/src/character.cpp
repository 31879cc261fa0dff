#include "padicvoa/character.hpp"

#include <stdexcept>

#include "padicvoa/modes.hpp"

namespace padicvoa {

Rational graded_trace(const HeisenbergState& v, int n) {
  const ZeroMode o(v);
  Rational trace;
  for (const auto& mono : grade_basis(n)) {
    trace += o(HeisenbergState::monomial(mono)).coefficient(mono);
  }
  return trace;
}

std::vector<std::vector<Rational>> zero_mode_matrix(const HeisenbergState& v, int n) {
  const ZeroMode o(v);
  const auto basis = grade_basis(n);
  std::vector<std::vector<Rational>> matrix(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const HeisenbergState image = o(HeisenbergState::monomial(basis[j]));
    for (std::size_t i = 0; i < basis.size(); ++i) matrix[i][j] = image.coefficient(basis[i]);
  }
  return matrix;
}

QSeries character(const HeisenbergState& v, int n_max) {
  if (n_max < 0) throw std::invalid_argument("character: n_max must be >= 0");
  QSeries out(Rational(Integer(-1), Integer(24)), n_max);
  for (int n = 0; n <= n_max; ++n) out[n] = graded_trace(v, n);
  return out;
}

QSeries normalized_character(const HeisenbergState& v, int n_max) {
  return eta_series(n_max) * character(v, n_max);
}

}  // namespace padicvoa
