#include "padicvoa/expr.hpp"

#include <cctype>
#include <optional>

#include "padicvoa/modes.hpp"

namespace padicvoa {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  StateExpr parse() {
    StateExpr expr;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    expr.terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      ++pos_;
      expr.terms.push_back(term(c == '-'));
    }
    return expr;
  }

 private:
  Term term(bool negative) {
    skip_space();
    Term t{Rational(1), {}};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Integer num = integer();
      Integer den(1);
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      t.coefficient = Rational(num, den);
    }
    if (negative) t.coefficient = -t.coefficient;
    while (true) {
      skip_space();
      if (peek() == 'h' || peek() == 'L') {
        t.factors.push_back(factor());
        continue;
      }
      if (consume("vac") || consume("|0>")) return t;
      fail("expected a generator or 'vac'");
    }
  }

  Factor factor() {
    Factor f{peek(), 0, 1, pos_};
    ++pos_;
    skip_space();
    expect('(');
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_space();
    f.index = small_int();
    if (negative) f.index = -f.index;
    skip_space();
    expect(')');
    // '^' directly after ')' binds a power; whitespace is allowed around it.
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      f.power = small_int();
      if (f.power < 1) throw ParseError("power must be >= 1", at);
    }
    return f;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_int() {
    const std::size_t start = pos_;
    const Integer value = integer();
    if (!value.fits_sint_p()) throw ParseError("integer out of range", start);
    return static_cast<int>(value.get_si());
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StateExpr parse_state(std::string_view text) { return Parser(text).parse(); }

HeisenbergState to_heisenberg(const StateExpr& expr) {
  HeisenbergState out;
  for (const auto& term : expr.terms) {
    HeisenbergState s = HeisenbergState::vacuum();
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      if (it->generator == 'h' && it->index >= 0) {
        throw ParseError("h(" + std::to_string(it->index) + ") is not a creation index; basis monomials need h(-n)",
                         it->offset);
      }
      for (int k = 0; k < it->power; ++k) {
        s = it->generator == 'h' ? h_mode(it->index, s) : virasoro_mode(it->index, s);
      }
    }
    out.add_scaled(s, term.coefficient);
  }
  return out;
}

VirasoroState to_virasoro(const StateExpr& expr, const VirasoroVoa& voa) {
  VirasoroState out;
  for (const auto& term : expr.terms) {
    VirasoroState s = VirasoroState::vacuum();
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      if (it->generator != 'L') throw ParseError("only L(n) generators act on the Virasoro module", it->offset);
      for (int k = 0; k < it->power; ++k) s = voa.apply_L(it->index, s);
    }
    out.add_scaled(s, term.coefficient);
  }
  return out;
}

}  // namespace padicvoa
