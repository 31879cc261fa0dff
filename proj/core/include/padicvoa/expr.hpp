#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "padicvoa/fock.hpp"
#include "padicvoa/virasoro.hpp"

namespace padicvoa {

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff? factor* vacuum
///   factor := ('h'|'L') '(' '-'? int ')' ('^' int)?
///   coeff  := int | int '/' int
///   vacuum := 'vac' | '|0>'
/// Factors act on the vacuum from right to left.
struct Factor {
  char generator;
  int index;
  int power;
  std::size_t offset;
};

struct Term {
  Rational coefficient;
  std::vector<Factor> factors;
};

struct StateExpr {
  std::vector<Term> terms;
};

/// Syntax or evaluation error at a byte offset of the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

StateExpr parse_state(std::string_view text);

/// h(n) must have n < 0 (a creation index); L(n) acts through the c = 1
/// Virasoro modes of the Heisenberg algebra.
HeisenbergState to_heisenberg(const StateExpr& expr);
/// Only L(n) factors are allowed.
VirasoroState to_virasoro(const StateExpr& expr, const VirasoroVoa& voa);

inline HeisenbergState parse_heisenberg(std::string_view text) { return to_heisenberg(parse_state(text)); }

}  // namespace padicvoa
