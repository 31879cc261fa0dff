#include <doctest.h>

#include "padicvoa/expr.hpp"
#include "padicvoa/modes.hpp"

using namespace padicvoa;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

std::size_t error_offset(const char* text) {
  try {
    parse_state(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse examples") {
  const HeisenbergState a = parse_heisenberg("h(-1)^2 vac");
  CHECK(a == h_monomial({1, 1}));
  CHECK(a.weight() == 2);
  const HeisenbergState b = parse_heisenberg("1/2 h(-3)h(-1) vac - 1/12 vac");
  CHECK(b.size() == 2);
  CHECK(b == h_monomial({3, 1}, q(1, 2)) - HeisenbergState::vacuum() * q(1, 12));
  CHECK(error_offset("h(-1 vac") == 5);
}

TEST_CASE("syntax") {
  const StateExpr e = parse_state("  -3/4 h(-2)^3 L(0) |0> + vac");
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].coefficient == q(-3, 4));
  REQUIRE(e.terms[0].factors.size() == 2);
  CHECK(e.terms[0].factors[0].generator == 'h');
  CHECK(e.terms[0].factors[0].index == -2);
  CHECK(e.terms[0].factors[0].power == 3);
  CHECK(e.terms[0].factors[1].generator == 'L');
  CHECK(e.terms[1].factors.empty());
  CHECK(parse_heisenberg("h(-2) h(-1) vac") == parse_heisenberg("h(-1)h(-2)vac"));
  CHECK(parse_heisenberg("vac - vac").is_zero());
  CHECK(error_offset("") == 0);
  CHECK(error_offset("h(-1)") == 5);
  CHECK(error_offset("2 x(-1) vac") == 2);
  CHECK(error_offset("1/0 vac") == 2);
  CHECK(error_offset("h(-1)^0 vac") == 6);
  CHECK(error_offset("vac vac") == 4);
  CHECK(error_offset("h(-1) vac +") == 11);
}

TEST_CASE("evaluation rules") {
  try {
    parse_heisenberg("h(-1) h(2) vac");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse_heisenberg("h(0) vac"), ParseError);
  CHECK(parse_heisenberg("L(-2) vac") == virasoro_mode(-2, HeisenbergState::vacuum()));
  CHECK(parse_heisenberg("L(1) h(-2) vac") == h_monomial({1}, Rational(2)));
  const VirasoroVoa voa{Rational(5)};
  CHECK(to_virasoro(parse_state("L(2) L(-2) vac"), voa) == VirasoroState::vacuum() * Rational(5));
  CHECK(to_virasoro(parse_state("L(-2)^2 vac"), voa) == VirasoroState::monomial(Partition{2, 2}));
  CHECK_THROWS_AS(to_virasoro(parse_state("h(-1) vac"), voa), ParseError);
}

TEST_CASE("render round trip") {
  const char* corpus[] = {
      "h(-1)^2 vac",
      "1/2 h(-3)h(-1) vac - 1/12 vac",
      "-7 h(-4) h(-2)^2 h(-1) vac + 3/5 h(-1) vac",
      "vac",
      "h(-5) vac - h(-5) vac + h(-2) vac",
      "L(-3) vac + 2 h(-1)^3 vac",
  };
  for (const char* text : corpus) {
    const HeisenbergState s = parse_heisenberg(text);
    const std::string canonical = to_string(s);
    INFO(text, " -> ", canonical);
    if (!s.is_zero()) {
      CHECK(parse_heisenberg(canonical) == s);
      CHECK(to_string(parse_heisenberg(canonical)) == canonical);
    }
  }
  const VirasoroVoa voa{Rational(2)};
  const VirasoroState v = to_virasoro(parse_state("L(-3) L(-2) vac - 4 L(-4) vac + L(1) L(-2)^2 vac"), voa);
  CHECK(to_virasoro(parse_state(to_string(v)), voa) == v);
}
