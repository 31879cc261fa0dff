#include "padicvoa/kummer.hpp"

#include <stdexcept>
#include <string>

#include "padicvoa/character.hpp"
#include "padicvoa/combinatorics.hpp"

namespace padicvoa {

namespace {

void require_odd_positive(long r) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("square-bracket index r must be odd and positive, got " + std::to_string(r));
}

void require_odd_prime(long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

}  // namespace

HeisenbergState square_bracket_state(long r) {
  require_odd_positive(r);
  HeisenbergState out;
  for (long m = 0; m < r; ++m) {
    const Integer c = c_coefficient(r, m);
    if (c == 0) continue;
    out.add_term(Partition{static_cast<int>(m + 1), 1}, Rational(c));
  }
  out.add_term(Partition{}, -bernoulli(r + 1) / Rational(r + 1));
  return out;
}

HeisenbergState v_state(long r) { return Rational(Integer(1), Integer(2)) * square_bracket_state(r); }

HeisenbergState u_state(long r, long p) {
  require_odd_prime(p);
  const Rational factor = Rational(1) - Rational(ipow(p, static_cast<unsigned long>(r)));
  return factor * square_bracket_state(r);
}

long kummer_index(long p, long a) {
  if (a < 0) throw std::invalid_argument("kummer depth must be >= 0");
  long pa = 1;
  for (long i = 0; i < a; ++i) pa *= p;
  return 1 + pa * (p - 1);
}

KummerFamily kummer_family(long p, long a_max) {
  require_odd_prime(p);
  KummerFamily family{p, a_max, {}};
  for (long a = 0; a <= a_max; ++a) family.states.push_back(u_state(kummer_index(p, a), p));
  return family;
}

KummerReport kummer_check(long p, long a, long b) {
  require_odd_prime(p);
  if (a < 0 || b < a) throw std::invalid_argument("kummer_check needs 0 <= a <= b");
  const long r = kummer_index(p, a);
  const long s = kummer_index(p, b);
  HeisenbergState defect = u_state(r, p) - u_state(s, p);
  DefectReport<HeisenbergState> report = make_report(
      std::move(defect), p, {{"p", p}, {"a", a}, {"b", b}, {"r", r}, {"s", s}},
      "u_r - u_s");
  return KummerReport{std::move(report), -(a + 1)};
}

NormExponent limit_character_check(long p, long a, int n_max) {
  require_odd_prime(p);
  const QSeries f = normalized_character(u_state(kummer_index(p, a), p), n_max);
  return qseries_padic_distance(f, Rational(2) * eisenstein_G2_star(p, n_max), p);
}

}  // namespace padicvoa
