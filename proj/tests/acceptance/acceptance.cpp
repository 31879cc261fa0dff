// Runs the twelve acceptance checks and prints one PASS/FAIL line for each.
// Exit status is the number of failed checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "padicvoa/axioms.hpp"
#include "padicvoa/character.hpp"
#include "padicvoa/combinatorics.hpp"
#include "padicvoa/kummer.hpp"
#include "padicvoa/modes.hpp"
#include "padicvoa/virasoro.hpp"

using namespace padicvoa;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!pass) detail << "; ";
    pass = false;
    detail << what;
  }
};

Outcome eisenstein_match() {
  Outcome o;
  for (int r : {1, 3, 5, 7, 9}) {
    const QSeries f = normalized_character(v_state(r), 20);
    const QSeries g = eisenstein_G(r + 1, 20);
    if (!(f == g)) o.fail("r=" + std::to_string(r) + " f=" + f.to_string());
  }
  if (o.pass) o.detail << "f(v_r) = G_{r+1} for r=1,3,5,7,9 to q^20";
  return o;
}

Outcome kummer_states() {
  Outcome o;
  int ok = 0;
  for (long p : {3L, 5L, 7L}) {
    for (long a = 0; a <= 2; ++a) {
      for (long b = a; b <= 2; ++b) {
        const KummerReport k = kummer_check(p, a, b);
        if (k.satisfied()) {
          ++ok;
        } else {
          o.fail("p=" + std::to_string(p) + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                 ") exponent " + k.report.norm_exponent.to_string() + " > " + std::to_string(k.bound));
        }
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << ok << "/18 pairs within bound";
  return o;
}

Outcome g2_star_limit() {
  Outcome o;
  int ok = 0;
  for (long p : {3L, 5L}) {
    for (long a = 0; a <= 2; ++a) {
      const NormExponent d = limit_character_check(p, a, 10);
      if (d <= NormExponent(-(a + 1))) {
        ++ok;
      } else {
        o.fail("p=" + std::to_string(p) + " a=" + std::to_string(a) + " distance exponent " + d.to_string() +
               " > " + std::to_string(-(a + 1)));
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << ok << "/6 cases within bound";
  return o;
}

Outcome sweep_outcome(const char* name, const SweepSummary& s) {
  Outcome o;
  if (s.nonzero != 0) o.fail(std::to_string(s.nonzero) + " nonzero defects");
  o.detail << (o.pass ? "" : "; ") << name << ": " << s.checked << " defects checked";
  return o;
}

Outcome jacobi() { return sweep_outcome("jacobi", jacobi_sweep(3, 2, 5)); }

Outcome commutator_associator() {
  const SweepSummary c = commutator_sweep(4, 3, 5);
  const SweepSummary a = associator_sweep(4, 3, 5);
  Outcome o;
  if (c.nonzero != 0) o.fail(std::to_string(c.nonzero) + " nonzero commutator defects");
  if (a.nonzero != 0) o.fail(std::to_string(a.nonzero) + " nonzero associator defects");
  o.detail << (o.pass ? "" : "; ") << c.checked << " commutator and " << a.checked << " associator defects checked";
  return o;
}

Outcome ccr() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& b : basis_states_up_to(6)) {
    for (int m = -5; m <= 5; ++m) {
      for (int n = -5; n <= 5; ++n) {
        HeisenbergState d = h_mode(m, h_mode(n, b)) - h_mode(n, h_mode(m, b));
        if (m + n == 0) d.add_scaled(b, Rational(-m));
        ++checked;
        if (!d.is_zero()) o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " b=" + to_string(b));
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked << " brackets checked";
  return o;
}

Outcome heisenberg_virasoro() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& b : basis_states_up_to(5)) {
    for (int m = -3; m <= 3; ++m) {
      for (int n = -3; n <= 3; ++n) {
        HeisenbergState d = virasoro_mode(m, virasoro_mode(n, b)) - virasoro_mode(n, virasoro_mode(m, b));
        d.add_scaled(virasoro_mode(m + n, b), Rational(-(m - n)));
        if (m + n == 0) d.add_scaled(b, -Rational(Integer(m * m * m - m), Integer(12)));
        ++checked;
        if (!d.is_zero()) o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " b=" + to_string(b));
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked << " brackets checked at c = 1";
  return o;
}

Outcome virasoro_voa() {
  Outcome o;
  std::size_t checked = 0;
  for (long c : {0L, 1L, 12L}) {
    const VirasoroVoa voa{Rational(c)};
    for (const auto& s : VirasoroVoa::basis_states_up_to(6)) {
      for (int m = -4; m <= 4; ++m) {
        for (int n = -4; n <= 4; ++n) {
          ++checked;
          const auto r = vir_bracket_defect(voa, m, n, s, 5);
          if (!r.is_zero()) o.fail("c'=" + std::to_string(c) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
          if (!has_integer_coefficients(voa.apply_L(m, voa.apply_L(n, s)))) {
            o.fail("denominator at c'=" + std::to_string(c) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
          }
        }
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked << " brackets checked, all integral";
  return o;
}

HeisenbergState random_state(std::mt19937& rng) {
  std::uniform_int_distribution<int> grade(0, 4), coeff(-30, 30), count(1, 4);
  HeisenbergState s;
  while (s.is_zero()) {
    const int terms = count(rng);
    for (int i = 0; i < terms; ++i) {
      const auto basis = grade_basis(grade(rng));
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      s.add_term(basis[pick(rng)], Rational(coeff(rng)));
    }
  }
  return s;
}

Outcome isometry() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> shift(-3, 3);
  int checked = 0;
  for (long p : {3L, 5L}) {
    for (int i = 0; i < 50; ++i) {
      HeisenbergState a = random_state(rng);
      if (i % 2 == 1) {
        const int k = shift(rng);
        a *= k >= 0 ? Rational(ipow(p, k)) : Rational(Integer(1), ipow(p, -k));
      }
      const IsometryProbe probe = isometry_probe(a, p, 4, -4, 4);
      ++checked;
      if (probe.lhs != probe.rhs) {
        o.fail("p=" + std::to_string(p) + " a=" + to_string(a) + " lhs=" + probe.lhs.to_string() +
               " rhs=" + probe.rhs.to_string());
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << checked << " probes (half rescaled by powers of p)";
  return o;
}

Outcome locality() {
  Outcome o;
  const auto basis = basis_states_up_to(3);
  const AxiomLab<HeisenbergModel> lab(HeisenbergModel{}, 5);
  std::size_t checked = 0;
  for (const auto& u : basis) {
    for (const auto& v : basis) {
      for (const auto& w : basis) {
        const int order = u.weight() + v.weight();
        for (const auto& point : lab.locality_profile(u, v, w, order + 1, lab.default_locality_window(u, v, w), order)) {
          ++checked;
          if (!point.norm_exponent.is_neg_infinity()) {
            o.fail("t=" + std::to_string(point.t) + " u=" + to_string(u) + " v=" + to_string(v) + " w=" + to_string(w));
          }
        }
      }
    }
  }
  const HeisenbergState h = h_monomial({1});
  const auto profile = locality_profile(h, h, HeisenbergState::vacuum(), 1, 5);
  if (profile[1].norm_exponent.is_neg_infinity()) o.fail("u=v=h, w=vac vanishes at t=1");
  o.detail << (o.pass ? "" : "; ") << checked << " profile points zero for t >= wt u + wt v; h,h nonzero at t=1";
  return o;
}

Outcome residue() { return sweep_outcome("residue", residue_sweep(4, 3, 5)); }

Outcome square_bracket() {
  Outcome o;
  for (int r : {1, 3, 5}) {
    const HeisenbergState closed = square_bracket_state(r);
    const HeisenbergState oracle = oracle::square_bracket_by_substitution(r);
    if (!(closed == oracle)) o.fail("r=" + std::to_string(r) + " closed=" + to_string(closed) + " oracle=" + to_string(oracle));
  }
  if (o.pass) o.detail << "closed form matches substitution for r=1,3,5";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"eisenstein match", eisenstein_match},
      {"kummer state congruences", kummer_states},
      {"G2* limit", g2_star_limit},
      {"jacobi sweep", jacobi},
      {"commutator and associator", commutator_associator},
      {"heisenberg ccr", ccr},
      {"virasoro in heisenberg (c = 1)", heisenberg_virasoro},
      {"virasoro voa (c' = 0, 1, 12)", virasoro_voa},
      {"isometry of Y", isometry},
      {"locality decay", locality},
      {"residue product", residue},
      {"square bracket expansion", square_bracket},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %2d %-32s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", index, name, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
