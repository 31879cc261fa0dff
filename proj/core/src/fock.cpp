#include "padicvoa/fock.hpp"

#include <stdexcept>

namespace padicvoa {

std::vector<Partition> grade_basis(int n) {
  if (n < 0) throw std::invalid_argument("grade_basis: n must be >= 0");
  return partitions_of(n);
}

std::vector<HeisenbergState> basis_states_up_to(int max_grade) {
  std::vector<HeisenbergState> out;
  for (int n = 0; n <= max_grade; ++n) {
    for (const auto& p : grade_basis(n)) out.push_back(HeisenbergState::monomial(p));
  }
  return out;
}

namespace {

std::string render_word(const Partition& word, char generator) {
  std::string out;
  const auto& parts = word.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += generator;
    out += "(-" + std::to_string(parts[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    out += " ";
    i = j;
  }
  return out + "|0>";
}

}  // namespace

std::string monomial_to_string(const Partition& monomial) { return render_word(monomial, 'h'); }

std::string detail::render_terms(const std::map<Partition, Rational>& terms, char generator) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    const bool negative = coeff.sign() < 0;
    const Rational magnitude = negative ? -coeff : coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + " ";
    out += render_word(key, generator);
    first = false;
  }
  return out;
}

std::string to_string(const HeisenbergState& state) { return detail::render_terms(state.terms(), 'h'); }

}  // namespace padicvoa
